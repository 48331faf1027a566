#pragma once

#include <vector>

#include <Eigen/Core>

#include "aqcpqc/statevector.hpp"

namespace aqcpqc {

constexpr int kMaxDenseOracleQubits = 12;
constexpr double kDefaultDegeneracyTol = 1e-8;

// Exact ground-space data: ground energy, degeneracy and an orthonormal
// basis of the ground space (columns of `vectors`).
struct SpectrumResult {
  double ground_energy = 0.0;
  int degeneracy = 0;
  Eigen::MatrixXcd vectors;  // 2^n x degeneracy
};

// Dense diagonalization for general Hamiltonians (n <= 12); diagonal
// Hamiltonians (I/Z terms only) use O(2^n) classical enumeration instead.
SpectrumResult exact_ground(const PauliHamiltonian& h,
                            double degeneracy_tol = kDefaultDegeneracyTol);

// Ground energy only (skips eigenvector extraction).
double exact_ground_energy(const PauliHamiltonian& h);

// sum_i |<psi|psi_opt,i>|^2 over the ground basis: the probability of
// sampling an optimal solution.
double overlap(const StateVector& state, const SpectrumResult& spectrum);

// <psi|H|psi> / E_exact; undefined when the ground energy is zero.
double approximation_ratio(const StateVector& state, const PauliHamiltonian& h,
                           const SpectrumResult& spectrum);

// |<psi|H|psi> - E_exact|
double energy_distance(const StateVector& state, const PauliHamiltonian& h,
                       const SpectrumResult& spectrum);

}  // namespace aqcpqc
