#include "aqcpqc/oracle.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace aqcpqc {

namespace {

SpectrumResult ground_from_diagonal(const PauliHamiltonian& h,
                                    double degeneracy_tol) {
  const int n = h.num_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t b = 0; b < dim; ++b) {
    best = std::min(best, h.diagonal_energy(b));
  }
  std::vector<std::uint64_t> ground_states;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (h.diagonal_energy(b) <= best + degeneracy_tol) {
      ground_states.push_back(b);
    }
  }
  SpectrumResult result;
  result.ground_energy = best;
  result.degeneracy = static_cast<int>(ground_states.size());
  result.vectors = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                          result.degeneracy);
  for (int i = 0; i < result.degeneracy; ++i) {
    result.vectors(static_cast<Eigen::Index>(ground_states[
                       static_cast<std::size_t>(i)]), i) = 1.0;
  }
  return result;
}

SpectrumResult ground_from_dense(const PauliHamiltonian& h,
                                 double degeneracy_tol) {
  if (h.num_qubits() > kMaxDenseOracleQubits) {
    throw Error(ErrorKind::size_limit,
                "dense oracle limited to n <= " +
                    std::to_string(kMaxDenseOracleQubits) + " qubits");
  }
  const Eigen::MatrixXcd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  const Eigen::VectorXd& evals = solver.eigenvalues();
  SpectrumResult result;
  result.ground_energy = evals(0);
  int d = 0;
  while (d < evals.size() &&
         evals(d) <= result.ground_energy + degeneracy_tol) {
    ++d;
  }
  result.degeneracy = d;
  result.vectors = solver.eigenvectors().leftCols(d);
  return result;
}

}  // namespace

SpectrumResult exact_ground(const PauliHamiltonian& h, double degeneracy_tol) {
  if (h.is_diagonal()) {
    return ground_from_diagonal(h, degeneracy_tol);
  }
  return ground_from_dense(h, degeneracy_tol);
}

double exact_ground_energy(const PauliHamiltonian& h) {
  if (h.is_diagonal()) {
    const std::uint64_t dim = std::uint64_t{1} << h.num_qubits();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t b = 0; b < dim; ++b) {
      best = std::min(best, h.diagonal_energy(b));
    }
    return best;
  }
  if (h.num_qubits() > kMaxDenseOracleQubits) {
    throw Error(ErrorKind::size_limit,
                "dense oracle limited to n <= " +
                    std::to_string(kMaxDenseOracleQubits) + " qubits");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      dense_matrix(h), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double overlap(const StateVector& state, const SpectrumResult& spectrum) {
  if (static_cast<Eigen::Index>(state.dim()) != spectrum.vectors.rows()) {
    throw Error(ErrorKind::invalid_argument,
                "state dimension does not match ground-space vectors");
  }
  const Eigen::Map<const Eigen::VectorXcd> psi(
      state.amplitudes().data(), static_cast<Eigen::Index>(state.dim()));
  double total = 0.0;
  for (int i = 0; i < spectrum.degeneracy; ++i) {
    total += std::norm(spectrum.vectors.col(i).dot(psi));
  }
  return total;
}

double approximation_ratio(const StateVector& state, const PauliHamiltonian& h,
                           const SpectrumResult& spectrum) {
  if (std::abs(spectrum.ground_energy) < 1e-12) {
    throw Error(ErrorKind::undefined_metric,
                "approximation ratio undefined for zero ground energy");
  }
  return expectation(state, h) / spectrum.ground_energy;
}

double energy_distance(const StateVector& state, const PauliHamiltonian& h,
                       const SpectrumResult& spectrum) {
  return std::abs(expectation(state, h) - spectrum.ground_energy);
}

}  // namespace aqcpqc
