#include "aqcpqc/derivatives.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace aqcpqc {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

ParameterVector shifted(const ParameterVector& theta,
                        std::initializer_list<std::pair<int, double>> shifts) {
  ParameterVector out = theta;
  for (const auto& [index, delta] : shifts) {
    out[static_cast<std::size_t>(index)] += delta;
  }
  return out;
}

}  // namespace

EnergySurface::EnergySurface(AnsatzSpec spec, PauliHamiltonian h)
    : spec_(spec), h_(std::move(h)) {
  spec_.validate();
  if (spec_.n != h_.num_qubits()) {
    throw Error(ErrorKind::invalid_argument,
                "ansatz/Hamiltonian qubit count mismatch");
  }
}

double EnergySurface::evaluate(const ParameterVector& theta) const {
  count_.fetch_add(1, std::memory_order_relaxed);
  return expectation(prepare_state(spec_, theta), h_);
}

Eigen::VectorXd gradient_ps(const EnergySurface& surface,
                            const ParameterVector& theta) {
  const int m = surface.num_parameters();
  if (static_cast<int>(theta.size()) != m) {
    throw Error(ErrorKind::invalid_argument, "parameter length mismatch");
  }
  Eigen::VectorXd grad(m);
  for (int j = 0; j < m; ++j) {
    const double plus = surface.evaluate(shifted(theta, {{j, half_pi}}));
    const double minus = surface.evaluate(shifted(theta, {{j, -half_pi}}));
    grad(j) = kShiftR * (plus - minus);
  }
  return grad;
}

Eigen::MatrixXd hessian_ps(const EnergySurface& surface,
                           const ParameterVector& theta) {
  const int m = surface.num_parameters();
  if (static_cast<int>(theta.size()) != m) {
    throw Error(ErrorKind::invalid_argument, "parameter length mismatch");
  }
  Eigen::MatrixXd hess(m, m);
  for (int j = 0; j < m; ++j) {
    for (int k = j; k < m; ++k) {
      const double pp =
          surface.evaluate(shifted(theta, {{j, half_pi}, {k, half_pi}}));
      const double mp =
          surface.evaluate(shifted(theta, {{j, -half_pi}, {k, half_pi}}));
      const double pm =
          surface.evaluate(shifted(theta, {{j, half_pi}, {k, -half_pi}}));
      const double mm =
          surface.evaluate(shifted(theta, {{j, -half_pi}, {k, -half_pi}}));
      const double value = kShiftR * kShiftR * (pp - mp - pm + mm);
      hess(j, k) = value;
      hess(k, j) = value;
    }
  }
  return hess;
}

std::vector<Eigen::MatrixXd> hessian_third_derivatives(
    const EnergySurface& surface, const ParameterVector& theta,
    const std::function<bool(int, int, int)>& filter) {
  const int m = surface.num_parameters();
  if (static_cast<int>(theta.size()) != m) {
    throw Error(ErrorKind::invalid_argument, "parameter length mismatch");
  }
  std::vector<Eigen::MatrixXd> tensor(
      static_cast<std::size_t>(m), Eigen::MatrixXd::Zero(m, m));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      for (int k = j; k < m; ++k) {
        if (filter && !filter(i, j, k)) continue;
        double acc = 0.0;
        for (int s1 : {+1, -1}) {
          for (int s2 : {+1, -1}) {
            for (int s3 : {+1, -1}) {
              const double value = surface.evaluate(
                  shifted(theta, {{i, s1 * half_pi},
                                  {j, s2 * half_pi},
                                  {k, s3 * half_pi}}));
              acc += s1 * s2 * s3 * value;
            }
          }
        }
        const double d = acc / 8.0;
        // Mirror over all index permutations of (i, j, k).
        tensor[static_cast<std::size_t>(i)](j, k) = d;
        tensor[static_cast<std::size_t>(i)](k, j) = d;
        tensor[static_cast<std::size_t>(j)](i, k) = d;
        tensor[static_cast<std::size_t>(j)](k, i) = d;
        tensor[static_cast<std::size_t>(k)](i, j) = d;
        tensor[static_cast<std::size_t>(k)](j, i) = d;
      }
    }
  }
  return tensor;
}

Eigen::VectorXd gradient_fd(const EnergySurface& surface,
                            const ParameterVector& theta, double h) {
  if (h <= 0.0) {
    throw Error(ErrorKind::invalid_argument,
                "finite-difference step must be positive");
  }
  const int m = surface.num_parameters();
  Eigen::VectorXd grad(m);
  for (int j = 0; j < m; ++j) {
    const double plus = surface.evaluate(shifted(theta, {{j, h}}));
    const double minus = surface.evaluate(shifted(theta, {{j, -h}}));
    grad(j) = (plus - minus) / (2.0 * h);
  }
  return grad;
}

Eigen::MatrixXd hessian_fd(const EnergySurface& surface,
                           const ParameterVector& theta, double h) {
  if (h <= 0.0) {
    throw Error(ErrorKind::invalid_argument,
                "finite-difference step must be positive");
  }
  const int m = surface.num_parameters();
  Eigen::MatrixXd hess(m, m);
  for (int j = 0; j < m; ++j) {
    for (int k = j; k < m; ++k) {
      const double pp = surface.evaluate(shifted(theta, {{j, h}, {k, h}}));
      const double mp = surface.evaluate(shifted(theta, {{j, -h}, {k, h}}));
      const double pm = surface.evaluate(shifted(theta, {{j, h}, {k, -h}}));
      const double mm = surface.evaluate(shifted(theta, {{j, -h}, {k, -h}}));
      const double value = (pp - mp - pm + mm) / (4.0 * h * h);
      hess(j, k) = value;
      hess(k, j) = value;
    }
  }
  return hess;
}

}  // namespace aqcpqc
