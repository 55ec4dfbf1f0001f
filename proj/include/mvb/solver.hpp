#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvb/acyclicity.hpp"
#include "mvb/dag.hpp"
#include "mvb/dataset.hpp"
#include "mvb/distribution.hpp"
#include "mvb/feature_map.hpp"
#include "mvb/param_matrix.hpp"

namespace mvb {

struct SolverConfig {
  double lambda0 = 0.05;
  double delta0 = 0.2;
  double gamma = 0.5;  // continuation shrink factor, in (0, 1)

  double edge_threshold = 0.3;  // tau_w, applied to W(H)
  double prune_threshold = 1.0;  // tau_p, two-stage refinement prune
  double parent_tol = 1e-8;      // edge criterion on sums of squares

  std::vector<double> mu_schedule = {1.0, 10.0, 100.0, 1000.0};
  int max_inner_iterations = 5000;
  double grad_tolerance = 1e-7;
  int max_rounds = 10;
  double score_decrease_tol = 1e-6;

  double stage2_ridge = 1e-3;
  AcyclicityKind acyclicity = AcyclicityKind::ExpmTrace;
  double init_noise_scale = 1e-3;
  std::uint64_t seed = 0;

  void validate() const;
};

// Plain-text key = value file; '#' starts a comment, unknown keys reject.
SolverConfig load_solver_config(const std::string& path);
void write_solver_config(const std::string& path, const SolverConfig& cfg);

struct SolveTraceRow {
  int round;
  double lambda;
  double delta;
  double mu;
  double score;    // unpenalized
  double h_value;  // acyclicity residual
  int edge_count;  // entries of W above the edge threshold
};

class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& msg, std::vector<SolveTraceRow> trace)
      : std::runtime_error(msg), trace_(std::move(trace)) {}
  const std::vector<SolveTraceRow>& trace() const { return trace_; }

 private:
  std::vector<SolveTraceRow> trace_;
};

struct SolveResult {
  ParamMatrix params;
  WeightedAdjacency weights;  // induced adjacency before thresholding
  Dag graph;                  // thresholded, cycle-broken
  std::vector<SolveTraceRow> trace;
  double final_score = 0.0;  // unpenalized
};

// Continuation over (lambda, delta) with a quadratic penalty path on the
// acyclicity residual; full map caps at p <= 12, first-order at p <= 64.
SolveResult solve(const BinaryDataset& data, const InteractionMap& map,
                  const SolverConfig& cfg);
SolveResult solve(const GeneralParams& gp, const InteractionMap& map, const SolverConfig& cfg);

// Thresholds W at tau_w; any residual directed cycle is broken by deleting
// its weakest edge.
Dag threshold_to_dag(const Eigen::Ref<const Eigen::MatrixXd>& w, double tau);

}  // namespace mvb
