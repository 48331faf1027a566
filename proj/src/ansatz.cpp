#include "aqcpqc/ansatz.hpp"

#include <numbers>

namespace aqcpqc {

StateVector prepare_state(const AnsatzSpec& spec,
                          const ParameterVector& params) {
  spec.validate();
  if (static_cast<int>(params.size()) != spec.num_parameters()) {
    throw Error(ErrorKind::invalid_argument,
                "parameter vector length " + std::to_string(params.size()) +
                    " does not match ansatz M = " +
                    std::to_string(spec.num_parameters()));
  }
  StateVector state = zero_state(spec.n);
  for (int block = 0; block <= spec.layers; ++block) {
    for (int q = 0; q < spec.n; ++q) {
      apply_ry(state, q, params[static_cast<std::size_t>(block * spec.n + q)]);
    }
    if (block < spec.layers) {
      for (int q = 0; q + 1 < spec.n; ++q) {
        apply_cz(state, q, q + 1);
      }
    }
  }
  return state;
}

ParameterVector initial_params_for_mixer(const AnsatzSpec& spec) {
  spec.validate();
  ParameterVector params(static_cast<std::size_t>(spec.num_parameters()), 0.0);
  for (int q = 0; q < spec.n; ++q) {
    params[static_cast<std::size_t>(spec.layers * spec.n + q)] =
        std::numbers::pi / 2.0;
  }
  return params;
}

}  // namespace aqcpqc
