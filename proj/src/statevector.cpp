#include "aqcpqc/statevector.hpp"

#include <bit>
#include <cmath>

namespace aqcpqc {

namespace {

std::uint64_t qubit_bit(int n, int qubit) {
  return std::uint64_t{1} << (n - 1 - qubit);
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > kMaxSimQubits) {
    throw Error(ErrorKind::size_limit,
                "statevector supports 1 <= n <= " +
                    std::to_string(kMaxSimQubits) + " qubits, got " +
                    std::to_string(n));
  }
  amplitudes_.assign(std::size_t{1} << n, {0.0, 0.0});
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

StateVector zero_state(int n) {
  StateVector state(n);
  state[0] = {1.0, 0.0};
  return state;
}

void apply_ry(StateVector& state, int qubit, double angle) {
  const int n = state.num_qubits();
  if (qubit < 0 || qubit >= n) {
    throw Error(ErrorKind::invalid_argument, "qubit index out of range");
  }
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const std::uint64_t bit = qubit_bit(n, qubit);
  const std::uint64_t dim = state.dim();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const std::uint64_t j = i | bit;
    const std::complex<double> a0 = state[i];
    const std::complex<double> a1 = state[j];
    state[i] = c * a0 - s * a1;
    state[j] = s * a0 + c * a1;
  }
}

void apply_cz(StateVector& state, int q1, int q2) {
  const int n = state.num_qubits();
  if (q1 == q2) {
    throw Error(ErrorKind::invalid_argument, "CZ requires distinct qubits");
  }
  if (q1 < 0 || q1 >= n || q2 < 0 || q2 >= n) {
    throw Error(ErrorKind::invalid_argument, "qubit index out of range");
  }
  const std::uint64_t mask = qubit_bit(n, q1) | qubit_bit(n, q2);
  const std::uint64_t dim = state.dim();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & mask) == mask) state[i] = -state[i];
  }
}

double term_expectation(const StateVector& state,
                        const PauliHamiltonian::CompiledTerm& term) {
  // P|b> = prefactor * (-1)^{popcount(b & phase_mask)} |b ^ flip_mask>, so
  // <psi|P|psi> = sum_b conj(psi[b ^ flip]) phase(b) psi[b].
  std::complex<double> acc{0.0, 0.0};
  const std::uint64_t dim = state.dim();
  for (std::uint64_t b = 0; b < dim; ++b) {
    const int parity = std::popcount(b & term.phase_mask) & 1;
    const std::complex<double> contrib =
        std::conj(state[b ^ term.flip_mask]) * state[b];
    acc += parity ? -contrib : contrib;
  }
  acc *= term.prefactor * term.coeff;
  return acc.real();
}

double expectation(const StateVector& state, const PauliHamiltonian& h) {
  if (state.num_qubits() != h.num_qubits()) {
    throw Error(ErrorKind::invalid_argument,
                "state/Hamiltonian qubit count mismatch");
  }
  double energy = 0.0;
  for (const auto& term : h.compiled_terms()) {
    energy += term_expectation(state, term);
  }
  return energy;
}

}  // namespace aqcpqc
