#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mvb/dag.hpp"
#include "mvb/dataset.hpp"
#include "mvb/distribution.hpp"
#include "mvb/feature_map.hpp"

namespace mvb {

enum class GraphFamily { ER, SF };

GraphFamily graph_family_from_string(std::string_view name);
std::string to_string(GraphFamily family);

struct GraphSpec {
  int p;
  int k;  // expected edges per node
  GraphFamily family;
  std::uint64_t seed;

  void validate() const;  // p >= 2, k >= 1
};

// Ground truth of a synthetic model: per-node weight vectors over the
// interaction map of the node's (ascending) parents; weight magnitudes lie
// in [1, 2]. For small p the exact distribution is attached.
struct GroundTruth {
  Dag graph;
  InteractionKind tau;
  std::vector<Eigen::VectorXd> node_weights;  // indexed by node id
  std::optional<GeneralParams> exact;         // filled when p <= kExactCap

  static constexpr int kExactCap = 12;
};

// ER: each pair kept with probability kp / C(p,2) (saturating at 1) and
// oriented by a random permutation. SF: preferential attachment with k
// edges per arriving node, oriented old -> new. Requires k < p.
Dag random_dag(const GraphSpec& spec);

// Algorithm: walk a topological order; per node draw weights over the
// active features of its parents, then sample the column row by row.
// Weight draws and row draws use a per-node substream of `seed`.
std::pair<BinaryDataset, GroundTruth> generate(const Dag& g, int n, InteractionKind tau,
                                               std::uint64_t seed);
std::pair<BinaryDataset, GroundTruth> generate(const GraphSpec& spec, int n,
                                               InteractionKind tau, std::uint64_t seed);

// Exact joint implied by the ground-truth conditionals (p <= kExactCap).
GeneralParams exact_general_params(const GroundTruth& gt);

}  // namespace mvb
