#pragma once

#include <vector>

#include "mvb/dag.hpp"
#include "mvb/dataset.hpp"
#include "mvb/solver.hpp"

namespace mvb {

struct BinotearsResult {
  Dag graph;               // final refined structure
  Dag stage1_graph;        // thresholded first-order structure
  std::vector<int> order;  // topological order used by stage 2
  SolveResult stage1;
};

// Two-stage learner: a first-order continuous solve fixes a topological
// order, then per-node logistic regressions with first- and second-order
// interaction features select parents along that order.
BinotearsResult binotears(const BinaryDataset& data, const SolverConfig& cfg);

// Topological order of the stage-1 graph. Ties (and the empty-graph case)
// are resolved by descending marginal-variance-weighted out-strength of the
// unthresholded W, then by node index.
std::vector<int> stage1_order(const SolveResult& stage1, const BinaryDataset& data);

// Stage 2 alone: parents of each node chosen among its predecessors in
// `order` by the aggregated-coefficient criterion, then pruned at tau_p.
Dag binotears_refine(const BinaryDataset& data, const std::vector<int>& order,
                     const SolverConfig& cfg);

}  // namespace mvb
