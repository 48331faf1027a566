#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "aqcpqc/oracle.hpp"
#include "aqcpqc/shift_solver.hpp"

namespace aqcpqc {

struct ScheduleConfig {
  int K = 20;
  SolveMode mode = SolveMode::check;
  SolverOptions solver;
  std::uint64_t seed = 0;
  // Record the oracle ground energy of H_k at every step.
  bool trace_exact = true;
  // Compute oracle-based final metrics (overlap, ratio, distance).
  bool final_metrics = true;

  void validate() const {
    if (K < 1) {
      throw Error(ErrorKind::invalid_schedule, "total steps K must be >= 1");
    }
  }
};

struct StepRecord {
  int k = 0;
  double energy = 0.0;
  double exact_energy = std::numeric_limits<double>::quiet_NaN();
  double shift_norm = 0.0;
  double residual = 0.0;
  double min_eig = std::numeric_limits<double>::quiet_NaN();
  double affine_min_eig = std::numeric_limits<double>::quiet_NaN();
  long long evaluations = 0;
  double wall_time_ms = 0.0;
  bool accepted = true;
  int iterations = 0;
  int null_dim = 0;
  double kappa = 0.0;
  double remainder = std::numeric_limits<double>::quiet_NaN();
};

struct FinalMetrics {
  double energy = 0.0;
  double exact_energy = std::numeric_limits<double>::quiet_NaN();
  double overlap = std::numeric_limits<double>::quiet_NaN();
  double approximation_ratio = std::numeric_limits<double>::quiet_NaN();
  double energy_distance = std::numeric_limits<double>::quiet_NaN();
  long long total_evaluations = 0;
  bool degraded = false;
};

// Full trace of one run; shared by the adiabatic driver and the VQE
// baseline (method-tagged).
struct RunRecord {
  std::string method;  // "aqcpqc" | "vqe-gd" | "vqe-spsa2"
  AnsatzSpec ansatz;
  ScheduleConfig schedule;  // meaningful for method == "aqcpqc"
  std::vector<StepRecord> steps;
  ParameterVector final_theta;
  FinalMetrics final;
  double wall_time_ms_total = 0.0;
};

// Algorithm: initialize theta* at the exact mixer ground state, then for
// k = 1..K assemble the shift problem for H_k = (1-k/K) h0 + (k/K) h1 at
// theta*, solve it in the configured mode and advance theta* by epsilon.
// Solver non-acceptance does not abort; the run continues flagged degraded.
RunRecord run(const PauliHamiltonian& h0, const PauliHamiltonian& h1,
              const AnsatzSpec& spec, const ScheduleConfig& config);

// One run per K with shared instance and config.
std::vector<RunRecord> sweep_steps(const PauliHamiltonian& h0,
                                   const PauliHamiltonian& h1,
                                   const AnsatzSpec& spec,
                                   const std::vector<int>& k_list,
                                   const ScheduleConfig& config);

// Appendix-style study: the same instance run with each entangling-layer
// count, 30-step schedule by default.
std::vector<RunRecord> expressiveness_study(const PauliHamiltonian& h1, int n,
                                            const std::vector<int>& layer_list,
                                            const ScheduleConfig& config);

}  // namespace aqcpqc
