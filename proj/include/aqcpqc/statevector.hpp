#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "aqcpqc/error.hpp"
#include "aqcpqc/pauli.hpp"

namespace aqcpqc {

constexpr int kMaxSimQubits = 14;

// Dense complex amplitude vector over the 2^n computational basis states.
// Index convention: qubit 0 is the most significant bit of the basis index.
class StateVector {
 public:
  explicit StateVector(int n);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const {
    return amplitudes_;
  }
  std::complex<double>& operator[](std::size_t i) { return amplitudes_[i]; }
  const std::complex<double>& operator[](std::size_t i) const {
    return amplitudes_[i];
  }

  double norm_squared() const;

 private:
  int n_;
  std::vector<std::complex<double>> amplitudes_;
};

// |0...0>
StateVector zero_state(int n);

// R_y(theta) = exp(-i theta sigma_y / 2) on the given qubit, in place.
// The generator sigma_y/2 has eigenvalues +-1/2, so the parameter-shift
// offset used throughout is pi/2.
void apply_ry(StateVector& state, int qubit, double angle);

// Controlled-Z: negates amplitudes where both qubits are 1.
void apply_cz(StateVector& state, int q1, int q2);

// <psi| H |psi>, exact per-term amplitude traversal, O(L 2^n).
double expectation(const StateVector& state, const PauliHamiltonian& h);

// <psi| P |psi> for one compiled term (coefficient included).
double term_expectation(const StateVector& state,
                        const PauliHamiltonian::CompiledTerm& term);

}  // namespace aqcpqc
