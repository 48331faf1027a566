#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "aqcpqc/ansatz.hpp"
#include "aqcpqc/pauli.hpp"

namespace aqcpqc {

// Parameter-shift offset for R_y generators (eigenvalues +-1/2, r = 1/2).
constexpr double kShiftR = 0.5;

// F(theta) = <psi(theta)| H |psi(theta)> for a fixed ansatz/Hamiltonian pair.
// Every evaluation increments a counter so resource accounting can be
// compared against the closed-form per-step predictions. The counter is
// atomic; shifted evaluations within one derivative call are independent and
// may run from parallel threads.
class EnergySurface {
 public:
  EnergySurface(AnsatzSpec spec, PauliHamiltonian h);

  double evaluate(const ParameterVector& theta) const;

  const AnsatzSpec& spec() const { return spec_; }
  const PauliHamiltonian& hamiltonian() const { return h_; }
  int num_parameters() const { return spec_.num_parameters(); }

  long long evaluation_count() const { return count_.load(); }
  void reset_evaluation_count() { count_.store(0); }

 private:
  AnsatzSpec spec_;
  PauliHamiltonian h_;
  mutable std::atomic<long long> count_{0};
};

// Exact gradient: dF/dtheta_j = r [F(theta + pi/(4r) e_j) - F(theta - ...)],
// with r = 1/2 (shift pi/2). Costs exactly 2M evaluations.
Eigen::VectorXd gradient_ps(const EnergySurface& surface,
                            const ParameterVector& theta);

// Exact Hessian from the four-point shift formula (prefactor 1/4, shifts
// +-pi/2); evaluated for j <= k and mirrored, 4*M(M+1)/2 evaluations.
Eigen::MatrixXd hessian_ps(const EnergySurface& surface,
                           const ParameterVector& theta);

// Third-derivative tensor D with D[i](j,k) = d(Hessian_jk)/dtheta_i, from the
// eight-point nested shift (prefactor 1/8). Symmetric under any index
// permutation; evaluated over i <= j <= k and mirrored,
// 8*M(M+1)(M+2)/6 evaluations. The optional filter restricts which index
// triples are measured (unmeasured entries stay zero).
std::vector<Eigen::MatrixXd> hessian_third_derivatives(
    const EnergySurface& surface, const ParameterVector& theta,
    const std::function<bool(int, int, int)>& filter = nullptr);

// Central finite differences, used as test oracles only.
Eigen::VectorXd gradient_fd(const EnergySurface& surface,
                            const ParameterVector& theta, double h = 1e-4);
Eigen::MatrixXd hessian_fd(const EnergySurface& surface,
                           const ParameterVector& theta, double h = 1e-3);

}  // namespace aqcpqc
