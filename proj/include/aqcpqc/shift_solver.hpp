#pragma once

#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "aqcpqc/derivatives.hpp"

namespace aqcpqc {

enum class SolveMode { check, affine };

struct SolverOptions {
  // Null-space threshold relative to the largest singular value of A
  // (absolute fallback 1e-10 when A = 0).
  double kappa_rel = 1e-6;
  // The Hessian at a computed minimum carries a highly degenerate zero
  // eigenvalue, so feasibility is min_eig >= -psd_tol rather than >= 0.
  double psd_tol = 1e-6;
  // Check mode: additional Hessian re-checks after the first candidate.
  int max_retries = 10;
  // Affine mode: supergradient ascent iteration cap.
  int ascent_iteration_cap = 200;
};

// Per-step data of the constrained problem
//   min ||eps||  s.t.  A eps + Q = 0,  Hessian(theta* + eps) PSD,
// assembled from measured derivatives at theta*. A doubles as the Hessian of
// <H_lambda> at theta*; D is the optional third-derivative tensor.
struct ShiftProblem {
  Eigen::VectorXd Q;
  Eigen::MatrixXd A;
  std::vector<Eigen::MatrixXd> D;  // empty unless affine mode
  double lambda = 0.0;
  ParameterVector theta_star;
};

struct NullSpaceBasis {
  Eigen::MatrixXd vectors;          // m x dim, orthonormal columns
  double kappa = 0.0;
  Eigen::VectorXd singular_values;  // descending
  double truncation_error = 0.0;    // sqrt(sum of discarded sigma^2)

  int dim() const { return static_cast<int>(vectors.cols()); }
};

struct ShiftSolution {
  Eigen::VectorXd epsilon;
  SolveMode mode = SolveMode::check;
  double residual = 0.0;          // ||A eps + Q||
  double min_eig_at_shift = 0.0;  // exact Hessian min eigenvalue at theta*+eps
  double affine_min_eig =
      std::numeric_limits<double>::quiet_NaN();  // affine-model value
  int iterations = 0;  // Hessian checks (check) / ascent steps (affine)
  bool accepted = false;
  int null_dim = 0;
  double kappa = 0.0;
};

// Q = lambda * gradient of <V> at theta* (parameter shift).
Eigen::VectorXd assemble_Q(const EnergySurface& surface_v,
                           const ParameterVector& theta_star, double lambda);

// A = Hessian of <H_lambda> at theta* (parameter shift).
Eigen::MatrixXd assemble_A(const EnergySurface& surface_hlambda,
                           const ParameterVector& theta_star);

// Minimum-norm least-squares solution of A eps + Q = 0 via the spectral
// pseudoinverse; singular values at or below the kappa cutoff are zeroed.
Eigen::VectorXd min_norm_solution(const Eigen::MatrixXd& A,
                                  const Eigen::VectorXd& Q,
                                  double kappa_rel = 1e-6);

// Orthonormal basis of the kappa-approximate null space of symmetric A:
// eigenvectors whose singular value is <= kappa = kappa_rel * sigma_max.
NullSpaceBasis null_space(const Eigen::MatrixXd& A, double kappa_rel = 1e-6);

// Smallest eigenvalue and a unit eigenvector of a symmetric matrix.
std::pair<double, Eigen::VectorXd> min_eigenvalue(const Eigen::MatrixXd& X);

// Remark loop: min-norm solve, exact Hessian re-check at the shifted point,
// then (if needed) moves within eps0 + span(N_kappa(A)) re-checking each
// candidate. Never throws on infeasibility; unaccepted solutions are flagged.
ShiftSolution solve_check_mode(const ShiftProblem& problem,
                               const EnergySurface& surface_hlambda,
                               const SolverOptions& options);

// Affine-Hessian program over null-space coordinates: supergradient ascent
// on the concave min-eigenvalue of H(c) = A + sum_k (eps0 + Vc)_k D_k until
// feasible, then a bisection back along the ascent path to shrink ||eps||.
// Records both the affine-model and the exact min-eigenvalue.
ShiftSolution solve_affine_mode(const ShiftProblem& problem,
                                const EnergySurface& surface_hlambda,
                                const SolverOptions& options);

// Taylor-remainder bound 2 ||eps||^2 (L0 cmax + lambda L1 bmax) for the
// first-order expansion of the perturbed energy.
double remainder_bound(const Eigen::VectorXd& epsilon, double l0, double cmax,
                       double lambda, double l1, double bmax);

// Closed-form energy-evaluation count per step for the given mode
// (first-try-accept in check mode; fixed in affine mode). The affine count
// includes the full symmetrized third-derivative tensor.
long long resource_estimate(int M, int null_dim, SolveMode mode);

}  // namespace aqcpqc
