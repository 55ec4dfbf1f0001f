#include "mvb/binotears.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvb/feature_map.hpp"
#include "mvb/logistic.hpp"
#include "mvb/subset_index.hpp"

namespace mvb {

std::vector<int> stage1_order(const SolveResult& stage1, const BinaryDataset& data) {
  const int p = stage1.graph.p();
  const Eigen::MatrixXd& w = stage1.weights.entries();
  std::vector<double> rank(p, 0.0);
  for (int i = 0; i < p; ++i) {
    const double mean = data.column(i).mean();
    rank[i] = mean * (1.0 - mean) * w.row(i).sum();
  }

  // Kahn over the thresholded graph, preferring high-rank sources; with no
  // edges this degenerates to the pure ranking order.
  std::vector<int> indegree(p, 0);
  for (const auto& [from, to] : stage1.graph.edges()) ++indegree[to];
  std::vector<char> placed(p, 0);
  std::vector<int> order;
  order.reserve(p);
  while (static_cast<int>(order.size()) < p) {
    int pick = -1;
    for (int v = 0; v < p; ++v) {
      if (placed[v] || indegree[v] != 0) continue;
      if (pick < 0 || rank[v] > rank[pick]) pick = v;
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (int c : stage1.graph.children(pick)) --indegree[c];
  }
  return order;
}

Dag binotears_refine(const BinaryDataset& data, const std::vector<int>& order,
                     const SolverConfig& cfg) {
  const int p = data.p();
  validate_permutation(order, p);
  std::vector<Edge> edges;
  for (int pos = 1; pos < p; ++pos) {
    const int target = order[pos];
    Eigen::MatrixXi predecessors(data.n(), pos);
    for (int t = 0; t < pos; ++t) predecessors.col(t) = data.rows().col(order[t]);

    const InteractionMap map(InteractionKind::FirstSecond, pos);
    const Eigen::MatrixXd features = map.design_matrix(predecessors);
    const LogisticFit fit = logistic_fit(features, data.column(target), cfg.stage2_ridge);

    // Aggregated weight per predecessor: sum of squares over every fitted
    // coefficient whose subset involves it.
    std::vector<double> strength(pos, 0.0);
    for (int k = 0; k < map.feature_count(); ++k) {
      const double c = fit.weights[k];
      if (c == 0.0) continue;
      for (Subset rest = map.active_subsets()[k]; rest != 0; rest &= rest - 1)
        strength[std::countr_zero(rest)] += c * c;
    }
    for (int t = 0; t < pos; ++t)
      if (strength[t] > cfg.parent_tol && strength[t] > cfg.prune_threshold)
        edges.emplace_back(order[t], target);
  }
  return Dag(p, std::move(edges));
}

BinotearsResult binotears(const BinaryDataset& data, const SolverConfig& cfg) {
  if (data.n() < 1) throw std::invalid_argument("binotears: need n >= 1");
  if (data.p() < 2) throw std::invalid_argument("binotears: need p >= 2");
  SolveResult stage1 = solve(data, InteractionMap(InteractionKind::FirstOnly, data.p()), cfg);
  std::vector<int> order = stage1_order(stage1, data);
  Dag refined = binotears_refine(data, order, cfg);
  Dag stage1_graph = stage1.graph;
  return BinotearsResult{std::move(refined), std::move(stage1_graph), std::move(order),
                         std::move(stage1)};
}

}  // namespace mvb
