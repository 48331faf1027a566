#include "aqcpqc/shift_solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace aqcpqc {

namespace {

constexpr double kAbsoluteKappaFloor = 1e-10;

struct SpectralSplit {
  Eigen::VectorXd eigenvalues;   // ascending, signed
  Eigen::MatrixXd eigenvectors;  // columns match eigenvalues
  double kappa = 0.0;
};

SpectralSplit decompose(const Eigen::MatrixXd& A, double kappa_rel) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
  SpectralSplit split;
  split.eigenvalues = solver.eigenvalues();
  split.eigenvectors = solver.eigenvectors();
  const double sigma_max = split.eigenvalues.size() == 0
                               ? 0.0
                               : split.eigenvalues.cwiseAbs().maxCoeff();
  split.kappa =
      sigma_max > 0.0 ? kappa_rel * sigma_max : kAbsoluteKappaFloor;
  return split;
}

ParameterVector shifted_point(const ParameterVector& theta_star,
                              const Eigen::VectorXd& epsilon) {
  ParameterVector out = theta_star;
  for (Eigen::Index i = 0; i < epsilon.size(); ++i) {
    out[static_cast<std::size_t>(i)] += epsilon(i);
  }
  return out;
}

double residual_norm(const Eigen::MatrixXd& A, const Eigen::VectorXd& Q,
                     const Eigen::VectorXd& eps) {
  return (A * eps + Q).norm();
}

}  // namespace

Eigen::VectorXd assemble_Q(const EnergySurface& surface_v,
                           const ParameterVector& theta_star, double lambda) {
  return lambda * gradient_ps(surface_v, theta_star);
}

Eigen::MatrixXd assemble_A(const EnergySurface& surface_hlambda,
                           const ParameterVector& theta_star) {
  return hessian_ps(surface_hlambda, theta_star);
}

Eigen::VectorXd min_norm_solution(const Eigen::MatrixXd& A,
                                  const Eigen::VectorXd& Q, double kappa_rel) {
  if (A.rows() != A.cols() || A.rows() != Q.size()) {
    throw Error(ErrorKind::invalid_argument, "A/Q shape mismatch");
  }
  const SpectralSplit split = decompose(A, kappa_rel);
  Eigen::VectorXd eps = Eigen::VectorXd::Zero(Q.size());
  for (Eigen::Index i = 0; i < split.eigenvalues.size(); ++i) {
    const double lambda_i = split.eigenvalues(i);
    if (std::abs(lambda_i) <= split.kappa) continue;
    const Eigen::VectorXd v = split.eigenvectors.col(i);
    eps -= (v.dot(Q) / lambda_i) * v;
  }
  return eps;
}

NullSpaceBasis null_space(const Eigen::MatrixXd& A, double kappa_rel) {
  if (A.rows() != A.cols()) {
    throw Error(ErrorKind::invalid_argument, "null_space requires square A");
  }
  const SpectralSplit split = decompose(A, kappa_rel);
  const Eigen::Index m = split.eigenvalues.size();

  NullSpaceBasis basis;
  basis.kappa = split.kappa;
  basis.singular_values = split.eigenvalues.cwiseAbs();
  std::sort(basis.singular_values.data(),
            basis.singular_values.data() + basis.singular_values.size(),
            std::greater<double>());

  std::vector<Eigen::Index> kept;
  double discarded_sq = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sigma = std::abs(split.eigenvalues(i));
    if (sigma <= split.kappa) {
      kept.push_back(i);
      discarded_sq += sigma * sigma;
    }
  }
  basis.vectors.resize(m, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    basis.vectors.col(static_cast<Eigen::Index>(j)) =
        split.eigenvectors.col(kept[j]);
  }
  basis.truncation_error = std::sqrt(discarded_sq);
  return basis;
}

std::pair<double, Eigen::VectorXd> min_eigenvalue(const Eigen::MatrixXd& X) {
  if (X.rows() != X.cols()) {
    throw Error(ErrorKind::invalid_argument,
                "min_eigenvalue requires a square matrix");
  }
  const double asym = (X - X.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8) {
    throw Error(ErrorKind::invalid_argument,
                "min_eigenvalue requires a symmetric matrix (residual " +
                    std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(X);
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

ShiftSolution solve_check_mode(const ShiftProblem& problem,
                               const EnergySurface& surface_hlambda,
                               const SolverOptions& options) {
  ShiftSolution sol;
  sol.mode = SolveMode::check;

  const Eigen::VectorXd eps0 =
      min_norm_solution(problem.A, problem.Q, options.kappa_rel);
  const NullSpaceBasis basis = null_space(problem.A, options.kappa_rel);
  sol.null_dim = basis.dim();
  sol.kappa = basis.kappa;

  auto exact_check = [&](const Eigen::VectorXd& eps) {
    const Eigen::MatrixXd hess =
        hessian_ps(surface_hlambda, shifted_point(problem.theta_star, eps));
    return min_eigenvalue(hess);
  };

  auto [f0, w0] = exact_check(eps0);
  sol.iterations = 1;
  sol.epsilon = eps0;
  sol.min_eig_at_shift = f0;

  if (f0 >= -options.psd_tol || basis.dim() == 0) {
    sol.accepted = f0 >= -options.psd_tol;
    sol.residual = residual_norm(problem.A, problem.Q, sol.epsilon);
    return sol;
  }

  // Candidate search within eps0 + span(N_kappa(A)). The ascent direction in
  // null-space coordinates comes from the current minimum eigenvector; the
  // diminishing step keeps candidates near eps0.
  const double step0 = eps0.norm() > 0.0 ? 0.1 * eps0.norm() : 0.1;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(basis.dim());
  double f_cur = f0;
  Eigen::VectorXd w_cur = w0;
  double sign = 1.0;

  double best_f = f0;
  Eigen::VectorXd best_eps = eps0;
  double best_min_eig = f0;

  for (int retry = 1; retry <= options.max_retries; ++retry) {
    Eigen::VectorXd dir = basis.vectors.transpose() * w_cur;
    if (dir.norm() < 1e-12) {
      // Eigenvector has no null-space component; probe coordinate directions.
      dir = Eigen::VectorXd::Zero(basis.dim());
      dir((retry - 1) % basis.dim()) = 1.0;
    }
    dir.normalize();
    const double step = step0 / std::sqrt(static_cast<double>(retry));
    const Eigen::VectorXd c_candidate = c + sign * step * dir;
    const Eigen::VectorXd eps_candidate = eps0 + basis.vectors * c_candidate;

    auto [f_candidate, w_candidate] = exact_check(eps_candidate);
    ++sol.iterations;

    if (f_candidate > best_f) {
      best_f = f_candidate;
      best_eps = eps_candidate;
      best_min_eig = f_candidate;
    }
    if (f_candidate >= -options.psd_tol) {
      sol.epsilon = eps_candidate;
      sol.min_eig_at_shift = f_candidate;
      sol.accepted = true;
      sol.residual = residual_norm(problem.A, problem.Q, sol.epsilon);
      return sol;
    }
    if (f_candidate > f_cur) {
      c = c_candidate;
      f_cur = f_candidate;
      w_cur = w_candidate;
    } else {
      sign = -sign;
    }
  }

  sol.epsilon = best_eps;
  sol.min_eig_at_shift = best_min_eig;
  sol.accepted = false;
  sol.residual = residual_norm(problem.A, problem.Q, sol.epsilon);
  return sol;
}

ShiftSolution solve_affine_mode(const ShiftProblem& problem,
                                const EnergySurface& surface_hlambda,
                                const SolverOptions& options) {
  if (problem.D.size() != static_cast<std::size_t>(problem.A.rows())) {
    throw Error(ErrorKind::invalid_argument,
                "affine mode requires the third-derivative tensor");
  }
  ShiftSolution sol;
  sol.mode = SolveMode::affine;

  const Eigen::VectorXd eps0 =
      min_norm_solution(problem.A, problem.Q, options.kappa_rel);
  const NullSpaceBasis basis = null_space(problem.A, options.kappa_rel);
  sol.null_dim = basis.dim();
  sol.kappa = basis.kappa;

  const Eigen::Index m = problem.A.rows();
  auto affine_hessian = [&](const Eigen::VectorXd& eps) {
    Eigen::MatrixXd h = problem.A;
    for (Eigen::Index k = 0; k < m; ++k) {
      h += eps(k) * problem.D[static_cast<std::size_t>(k)];
    }
    return h;
  };

  Eigen::VectorXd c = Eigen::VectorXd::Zero(basis.dim());
  auto [f0, w0] = min_eigenvalue(affine_hessian(eps0));
  double f_cur = f0;
  Eigen::VectorXd w_cur = w0;

  if (f0 < -options.psd_tol && basis.dim() > 0) {
    // B_i = sum_k V_ki D_k: derivative of the affine Hessian along null
    // direction i; w^T B_i w is a supergradient component of the concave
    // minimum-eigenvalue function.
    std::vector<Eigen::MatrixXd> B(static_cast<std::size_t>(basis.dim()));
    for (int i = 0; i < basis.dim(); ++i) {
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index k = 0; k < m; ++k) {
        b += basis.vectors(k, i) * problem.D[static_cast<std::size_t>(k)];
      }
      B[static_cast<std::size_t>(i)] = b;
    }
    auto affine_f_at = [&](const Eigen::VectorXd& coords) {
      return min_eigenvalue(affine_hessian(eps0 + basis.vectors * coords));
    };

    const double step0 = eps0.norm() > 0.0 ? 0.1 * eps0.norm() : 0.1;
    for (int t = 1; t <= options.ascent_iteration_cap; ++t) {
      Eigen::VectorXd g(basis.dim());
      for (int i = 0; i < basis.dim(); ++i) {
        g(i) = w_cur.dot(B[static_cast<std::size_t>(i)] * w_cur);
      }
      if (g.norm() < 1e-14) break;
      const Eigen::VectorXd c_candidate =
          c + (step0 / std::sqrt(static_cast<double>(t))) * g.normalized();
      auto [f_candidate, w_candidate] = affine_f_at(c_candidate);
      ++sol.iterations;
      if (f_candidate >= f_cur) {
        c = c_candidate;
        f_cur = f_candidate;
        w_cur = w_candidate;
      }
      if (f_cur >= -options.psd_tol) break;
    }

    if (f_cur >= -options.psd_tol && c.norm() > 0.0) {
      // The affine model is concave along the ray 0 -> c, so its feasible
      // segment is an interval ending at c; bisect for the boundary point
      // closest to eps0 (smallest ||eps|| on the path).
      double lo = 0.0;
      double hi = 1.0;
      for (int it = 0; it < 60 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (affine_f_at(mid * c).first >= -options.psd_tol) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      c *= hi;
      std::tie(f_cur, w_cur) = affine_f_at(c);
    }
  }

  sol.epsilon = eps0 + basis.vectors * c;
  sol.affine_min_eig = f_cur;
  sol.residual = residual_norm(problem.A, problem.Q, sol.epsilon);

  const Eigen::MatrixXd exact_hess = hessian_ps(
      surface_hlambda, shifted_point(problem.theta_star, sol.epsilon));
  sol.min_eig_at_shift = min_eigenvalue(exact_hess).first;
  sol.accepted = sol.min_eig_at_shift >= -options.psd_tol;
  return sol;
}

double remainder_bound(const Eigen::VectorXd& epsilon, double l0, double cmax,
                       double lambda, double l1, double bmax) {
  for (double v : {l0, cmax, lambda, l1, bmax}) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw Error(ErrorKind::invalid_argument,
                  "remainder bound inputs must be nonnegative");
    }
  }
  const double norm_sq = epsilon.squaredNorm();
  return 2.0 * norm_sq * (l0 * cmax + lambda * l1 * bmax);
}

long long resource_estimate(int M, int null_dim, SolveMode mode) {
  (void)null_dim;  // full-tensor route: the count does not depend on it
  if (M <= 0) return 0;
  const long long m = M;
  // Q: 2M.  A: 4 * M(M+1)/2.  Exact Hessian re-check at the shifted point:
  // another 4 * M(M+1)/2.
  long long count = 2 * m + 4 * m * (m + 1);
  if (mode == SolveMode::affine) {
    // Eight-point third derivatives over i <= j <= k.
    count += 8 * m * (m + 1) * (m + 2) / 6;
  }
  return count;
}

}  // namespace aqcpqc
