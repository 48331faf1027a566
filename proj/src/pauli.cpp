#include "aqcpqc/pauli.hpp"

#include <bit>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

namespace aqcpqc {

namespace {

std::uint64_t qubit_bit(int n, int qubit) {
  // Qubit 0 is the most significant bit of the basis index.
  return std::uint64_t{1} << (n - 1 - qubit);
}

PauliHamiltonian::CompiledTerm compile_term(int n, double coeff,
                                            const PauliString& s) {
  PauliHamiltonian::CompiledTerm t;
  t.coeff = coeff;
  int num_y = 0;
  for (int q = 0; q < n; ++q) {
    switch (s[static_cast<std::size_t>(q)]) {
      case 'I':
        break;
      case 'X':
        t.flip_mask |= qubit_bit(n, q);
        break;
      case 'Y':
        t.flip_mask |= qubit_bit(n, q);
        t.phase_mask |= qubit_bit(n, q);
        ++num_y;
        break;
      case 'Z':
        t.phase_mask |= qubit_bit(n, q);
        break;
      default:
        throw Error(ErrorKind::invalid_argument,
                    "invalid Pauli symbol in string: " + s);
    }
  }
  static const std::complex<double> i_powers[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  t.prefactor = i_powers[num_y % 4];
  return t;
}

PauliString single_site(int n, int qubit, char op) {
  PauliString s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(qubit)] = op;
  return s;
}

PauliString two_site(int n, int q1, int q2, char op) {
  PauliString s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(q1)] = op;
  s[static_cast<std::size_t>(q2)] = op;
  return s;
}

}  // namespace

bool is_valid_pauli_string(const PauliString& s) {
  for (char c : s) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') return false;
  }
  return !s.empty();
}

PauliHamiltonian::PauliHamiltonian(
    int n, std::vector<std::pair<double, PauliString>> terms,
    std::string label)
    : n_(n), label_(std::move(label)) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_size, "qubit count must be >= 1");
  }
  std::map<PauliString, double> merged;
  for (const auto& [coeff, s] : terms) {
    if (static_cast<int>(s.size()) != n || !is_valid_pauli_string(s)) {
      throw Error(ErrorKind::invalid_argument,
                  "Pauli string '" + s + "' does not match qubit count " +
                      std::to_string(n));
    }
    if (!std::isfinite(coeff)) {
      throw Error(ErrorKind::invalid_argument,
                  "non-finite coefficient on term " + s);
    }
    merged[s] += coeff;
  }
  for (const auto& [s, coeff] : merged) {
    if (coeff == 0.0) continue;
    terms_.emplace_back(coeff, s);
    compiled_.push_back(compile_term(n, coeff, s));
  }
}

bool PauliHamiltonian::is_diagonal() const {
  for (const auto& t : compiled_) {
    if (t.flip_mask != 0) return false;
  }
  return true;
}

double PauliHamiltonian::diagonal_energy(std::uint64_t basis_index) const {
  double energy = 0.0;
  for (const auto& t : compiled_) {
    const int parity = std::popcount(basis_index & t.phase_mask) & 1;
    energy += parity ? -t.coeff : t.coeff;
  }
  return energy;
}

double PauliHamiltonian::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [coeff, s] : terms_) {
    m = std::max(m, std::abs(coeff));
  }
  return m;
}

PauliHamiltonian PauliHamiltonian::scaled(double factor) const {
  std::vector<std::pair<double, PauliString>> terms;
  terms.reserve(terms_.size());
  for (const auto& [coeff, s] : terms_) {
    terms.emplace_back(factor * coeff, s);
  }
  return PauliHamiltonian(n_, std::move(terms), label_);
}

PauliHamiltonian add(const PauliHamiltonian& a, const PauliHamiltonian& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw Error(ErrorKind::invalid_argument,
                "qubit count mismatch in Hamiltonian sum");
  }
  auto terms = a.terms();
  const auto& bt = b.terms();
  terms.insert(terms.end(), bt.begin(), bt.end());
  return PauliHamiltonian(a.num_qubits(), std::move(terms), a.label());
}

PauliHamiltonian subtract(const PauliHamiltonian& a,
                          const PauliHamiltonian& b) {
  return add(a, b.scaled(-1.0));
}

PauliHamiltonian mixer_h0(int n) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_size, "mixer requires n >= 1");
  }
  std::vector<std::pair<double, PauliString>> terms;
  for (int q = 0; q < n; ++q) {
    terms.emplace_back(-1.0, single_site(n, q, 'X'));
  }
  return PauliHamiltonian(n, std::move(terms), "mixer");
}

PauliHamiltonian maxcut_hamiltonian(const std::vector<WeightedEdge>& edges,
                                    int n) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_size, "maxcut requires n >= 1");
  }
  std::vector<std::pair<double, PauliString>> terms;
  double constant = 0.0;
  for (const auto& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorKind::invalid_instance,
                  "self-loop edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ") in maxcut instance");
    }
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorKind::invalid_instance,
                  "edge endpoint out of range in maxcut instance");
    }
    if (!std::isfinite(e.w)) {
      throw Error(ErrorKind::invalid_instance, "non-finite edge weight");
    }
    constant -= e.w / 2.0;
    terms.emplace_back(e.w / 2.0, two_site(n, e.u, e.v, 'Z'));
  }
  if (constant != 0.0) {
    terms.emplace_back(constant, PauliString(static_cast<std::size_t>(n), 'I'));
  }
  return PauliHamiltonian(n, std::move(terms), "maxcut");
}

PauliHamiltonian number_partitioning_hamiltonian(
    const std::vector<long long>& numbers) {
  const int n = static_cast<int>(numbers.size());
  if (n < 2) {
    throw Error(ErrorKind::invalid_instance,
                "number partitioning requires at least 2 numbers");
  }
  std::vector<std::pair<double, PauliString>> terms;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_sq += static_cast<double>(numbers[i]) * static_cast<double>(numbers[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double c =
          static_cast<double>(numbers[i]) * static_cast<double>(numbers[j]);
      terms.emplace_back(c, two_site(n, std::min(i, j), std::max(i, j), 'Z'));
    }
  }
  terms.emplace_back(sum_sq, PauliString(static_cast<std::size_t>(n), 'I'));
  return PauliHamiltonian(n, std::move(terms), "numpart");
}

PauliHamiltonian tfi_hamiltonian(const std::vector<double>& couplings,
                                 double field) {
  const int n = static_cast<int>(couplings.size());
  if (n < 2) {
    throw Error(ErrorKind::invalid_instance,
                "TFI chain requires n >= 2 couplings");
  }
  if (!std::isfinite(field)) {
    throw Error(ErrorKind::invalid_instance, "non-finite TFI field");
  }
  std::vector<std::pair<double, PauliString>> terms;
  for (int k = 0; k < n; ++k) {
    if (!std::isfinite(couplings[static_cast<std::size_t>(k)])) {
      throw Error(ErrorKind::invalid_instance, "non-finite TFI coupling");
    }
    const int next = (k + 1) % n;
    terms.emplace_back(-couplings[static_cast<std::size_t>(k)],
                       two_site(n, std::min(k, next), std::max(k, next), 'Z'));
    terms.emplace_back(-field, single_site(n, k, 'X'));
  }
  return PauliHamiltonian(n, std::move(terms), "tfi");
}

PauliHamiltonian interpolate(const PauliHamiltonian& h0,
                             const PauliHamiltonian& h1, int k, int K) {
  if (K < 1) {
    throw Error(ErrorKind::invalid_schedule, "total steps K must be >= 1");
  }
  if (k < 0 || k > K) {
    throw Error(ErrorKind::invalid_schedule,
                "step k = " + std::to_string(k) + " outside [0, " +
                    std::to_string(K) + "]");
  }
  if (h0.num_qubits() != h1.num_qubits()) {
    throw Error(ErrorKind::invalid_argument,
                "qubit count mismatch in interpolation");
  }
  const double s = static_cast<double>(k) / static_cast<double>(K);
  return add(h0.scaled(1.0 - s), h1.scaled(s));
}

Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h) {
  const int n = h.num_qubits();
  if (n > kMaxDenseQubits) {
    throw Error(ErrorKind::size_limit,
                "dense matrix limited to n <= " +
                    std::to_string(kMaxDenseQubits) + " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& t : h.compiled_terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const int parity = std::popcount(b & t.phase_mask) & 1;
      const std::complex<double> amp =
          t.coeff * t.prefactor * (parity ? -1.0 : 1.0);
      m(static_cast<Eigen::Index>(b ^ t.flip_mask),
        static_cast<Eigen::Index>(b)) += amp;
    }
  }
  return m;
}

std::string hamiltonian_to_json(const PauliHamiltonian& h) {
  nlohmann::json j;
  j["n"] = h.num_qubits();
  j["label"] = h.label();
  auto& terms = j["terms"] = nlohmann::json::array();
  for (const auto& [coeff, s] : h.terms()) {
    terms.push_back(nlohmann::json::array({coeff, s}));
  }
  return j.dump();
}

PauliHamiltonian hamiltonian_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::io,
                std::string("invalid Hamiltonian JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("terms")) {
    throw Error(ErrorKind::io, "Hamiltonian JSON missing 'n' or 'terms'");
  }
  std::vector<std::pair<double, PauliString>> terms;
  for (const auto& t : j["terms"]) {
    terms.emplace_back(t.at(0).get<double>(), t.at(1).get<PauliString>());
  }
  return PauliHamiltonian(j["n"].get<int>(), std::move(terms),
                          j.value("label", std::string{}));
}

}  // namespace aqcpqc
