#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "aqcpqc/error.hpp"

namespace aqcpqc {

// A Pauli string is stored as a length-n word over {I, X, Y, Z}; position q
// is the operator acting on qubit q.
using PauliString = std::string;

bool is_valid_pauli_string(const PauliString& s);

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Weighted sum of Pauli strings, H = sum_l c_l P_l. Terms are merged and
// kept in lexicographic string order on construction, so two Hamiltonians
// built from the same physical operator compare equal term-by-term.
// Immutable after construction; safe to share across threads.
class PauliHamiltonian {
 public:
  struct CompiledTerm {
    double coeff = 0.0;
    std::uint64_t flip_mask = 0;   // X and Y positions (amplitude permutation)
    std::uint64_t phase_mask = 0;  // Z and Y positions (sign from bit parity)
    std::complex<double> prefactor{1.0, 0.0};  // i^{#Y}
  };

  PauliHamiltonian() = default;
  PauliHamiltonian(int n, std::vector<std::pair<double, PauliString>> terms,
                   std::string label = "");

  int num_qubits() const { return n_; }
  const std::string& label() const { return label_; }
  const std::vector<std::pair<double, PauliString>>& terms() const {
    return terms_;
  }
  const std::vector<CompiledTerm>& compiled_terms() const {
    return compiled_;
  }
  std::size_t num_terms() const { return terms_.size(); }

  // True when every term is a product of I/Z only (classical Hamiltonian).
  bool is_diagonal() const;

  // Energy of the computational basis state |b>; only valid for diagonal
  // Hamiltonians.
  double diagonal_energy(std::uint64_t basis_index) const;

  double max_abs_coefficient() const;

  PauliHamiltonian scaled(double factor) const;

 private:
  int n_ = 0;
  std::string label_;
  std::vector<std::pair<double, PauliString>> terms_;
  std::vector<CompiledTerm> compiled_;
};

PauliHamiltonian add(const PauliHamiltonian& a, const PauliHamiltonian& b);
PauliHamiltonian subtract(const PauliHamiltonian& a,
                          const PauliHamiltonian& b);

// H0 = -sum_j X_j, the transverse-field mixer with ground state |+>^n.
PauliHamiltonian mixer_h0(int n);

// H_MC = -sum_{(i,j) in E} (w_ij/2) (1 - Z_i Z_j).
PauliHamiltonian maxcut_hamiltonian(const std::vector<WeightedEdge>& edges,
                                    int n);

// H_NP = sum_{i != j} n_i n_j Z_i Z_j + (sum_i n_i^2) I; eigenvalue on a
// spin assignment s is (sum_i s_i n_i)^2.
PauliHamiltonian number_partitioning_hamiltonian(
    const std::vector<long long>& numbers);

// H_TFI = -sum_k J_k Z_k Z_{k+1} - h sum_k X_k, periodic boundary.
PauliHamiltonian tfi_hamiltonian(const std::vector<double>& couplings,
                                 double field);

// (1 - k/K) h0 + (k/K) h1 with coinciding strings merged.
PauliHamiltonian interpolate(const PauliHamiltonian& h0,
                             const PauliHamiltonian& h1, int k, int K);

// Dense Hermitian matrix in the computational basis. Basis index convention:
// qubit 0 is the most significant bit of the index (shared by all modules).
Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h);

std::string hamiltonian_to_json(const PauliHamiltonian& h);
PauliHamiltonian hamiltonian_from_json(const std::string& json_text);

constexpr int kMaxDenseQubits = 14;

}  // namespace aqcpqc
