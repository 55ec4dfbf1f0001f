#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvb/datagen.hpp"
#include "mvb/solver.hpp"

namespace mvb {

// Cell grid and execution settings for the simulate / bench harness.
struct ExperimentSpec {
  std::vector<int> p_grid;
  std::vector<int> k_grid;
  std::vector<GraphFamily> families;
  int n = 10000;
  InteractionKind tau = InteractionKind::FirstSecond;
  std::vector<std::string> methods = {"binotears"};
  int replications = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_dir;
  SolverConfig solver;
  double smoothing = 0.5;

  void validate() const;
};

// Deterministic per-(cell, replication) seed, independent of --jobs.
std::uint64_t replication_seed(std::uint64_t seed, std::size_t cell, int rep);

struct EvaluateRow {
  int shd;
  int estimated_edges;
  int true_edges;
};
EvaluateRow evaluate_graphs(const Dag& estimated, const Dag& truth);

// Subcommand bodies; each returns a process exit code.
int cmd_simulate(const ExperimentSpec& spec);
int cmd_learn(const std::string& method, const std::string& data_path,
              const std::string& gp_path, const std::string& config_path,
              const std::string& out_dir, double smoothing = 0.5);
int cmd_evaluate(const std::string& estimated_path, const std::string& truth_path,
                 const std::string& out_path);
int cmd_bench(const ExperimentSpec& spec);

}  // namespace mvb
