#pragma once

#include <vector>

#include "aqcpqc/statevector.hpp"

namespace aqcpqc {

using ParameterVector = std::vector<double>;

// Hardware-efficient ansatz: `layers` blocks of [R_y layer, nearest-neighbor
// CZ chain] followed by one final R_y layer. layers = 0 means a single R_y
// layer and no CZ gates. Parameter ordering is block-major, qubit-minor.
struct AnsatzSpec {
  int n = 1;
  int layers = 1;

  int num_parameters() const { return (layers + 1) * n; }

  void validate() const {
    if (n < 1 || n > kMaxSimQubits) {
      throw Error(ErrorKind::invalid_size,
                  "ansatz qubit count out of range: " + std::to_string(n));
    }
    if (layers < 0) {
      throw Error(ErrorKind::invalid_size, "entangling layer count must be >= 0");
    }
  }
};

StateVector prepare_state(const AnsatzSpec& spec, const ParameterVector& params);

// All blocks zero except the final R_y block at pi/2: prepares |+>^n, the
// exact ground state of mixer_h0 with energy -n.
ParameterVector initial_params_for_mixer(const AnsatzSpec& spec);

}  // namespace aqcpqc
