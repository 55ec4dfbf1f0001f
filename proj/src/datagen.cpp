#include "mvb/datagen.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "mvb/errors.hpp"
#include "mvb/rng.hpp"
#include "mvb/util.hpp"

namespace mvb {

GraphFamily graph_family_from_string(std::string_view name) {
  if (name == "ER" || name == "er") return GraphFamily::ER;
  if (name == "SF" || name == "sf") return GraphFamily::SF;
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

std::string to_string(GraphFamily family) {
  return family == GraphFamily::ER ? "ER" : "SF";
}

void GraphSpec::validate() const {
  if (p < 2) throw std::invalid_argument("GraphSpec: p must be >= 2");
  if (k < 1) throw std::invalid_argument("GraphSpec: k must be >= 1");
}

Dag random_dag(const GraphSpec& spec) {
  spec.validate();
  if (spec.k >= spec.p)
    throw std::invalid_argument("random_dag: infeasible density, k must be < p");
  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges;

  if (spec.family == GraphFamily::ER) {
    const double pairs = static_cast<double>(spec.p) * (spec.p - 1) / 2.0;
    const double q = std::min(1.0, static_cast<double>(spec.k) * spec.p / pairs);
    std::vector<int> position(spec.p);
    std::iota(position.begin(), position.end(), 0);
    rng.shuffle(position);  // position[v] = rank of node v in the causal order
    for (int i = 0; i < spec.p; ++i)
      for (int j = i + 1; j < spec.p; ++j)
        if (rng.u01() < q) {
          if (position[i] < position[j])
            edges.emplace_back(i, j);
          else
            edges.emplace_back(j, i);
        }
  } else {
    // Linear preferential attachment; node 0 seeds the graph, each arriving
    // node attaches k edges from distinct existing nodes (old -> new).
    std::vector<int> degree(spec.p, 0);
    for (int v = 1; v < spec.p; ++v) {
      const int attach = std::min(spec.k, v);
      std::vector<char> chosen(v, 0);
      for (int e = 0; e < attach; ++e) {
        double total = 0.0;
        for (int u = 0; u < v; ++u)
          if (!chosen[u]) total += degree[u] + 1.0;
        double draw = rng.u01() * total;
        int picked = -1;
        for (int u = 0; u < v; ++u) {
          if (chosen[u]) continue;
          draw -= degree[u] + 1.0;
          if (draw <= 0.0) {
            picked = u;
            break;
          }
        }
        if (picked < 0) picked = v - 1;  // guard against roundoff at the tail
        chosen[picked] = 1;
        edges.emplace_back(picked, v);
        ++degree[picked];
        ++degree[v];
      }
    }
  }
  return Dag(spec.p, std::move(edges));
}

namespace {

Eigen::VectorXd draw_weights(SplitMix64& rng, int count) {
  Eigen::VectorXd w(count);
  for (int i = 0; i < count; ++i) {
    const double sign = rng.u01() < 0.5 ? -1.0 : 1.0;
    w[i] = sign * (1.0 + rng.u01());
  }
  return w;
}

// Feature support of a node's sorted parent list within one configuration.
Subset parent_support(const std::vector<int>& parents, Subset config) {
  Subset s = 0;
  for (std::size_t t = 0; t < parents.size(); ++t)
    if (config & (Subset{1} << parents[t])) s |= Subset{1} << t;
  return s;
}

}  // namespace

std::pair<BinaryDataset, GroundTruth> generate(const Dag& g, int n, InteractionKind tau,
                                               std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  const int p = g.p();
  const SplitMix64 root(seed);

  GroundTruth gt{g, tau, std::vector<Eigen::VectorXd>(p), std::nullopt};
  Eigen::MatrixXi rows = Eigen::MatrixXi::Zero(n, p);

  for (int node : g.topological_order()) {
    const std::vector<int> parents = g.parents(node);
    const InteractionMap map(tau, static_cast<int>(parents.size()));
    SplitMix64 stream = root.split(static_cast<std::uint64_t>(node));
    gt.node_weights[node] = draw_weights(stream, map.feature_count());

    for (int i = 0; i < n; ++i) {
      Subset support = 0;
      for (std::size_t t = 0; t < parents.size(); ++t)
        if (rows(i, parents[t]) == 1) support |= Subset{1} << t;
      const double z = gt.node_weights[node].dot(map.features(support));
      rows(i, node) = stream.u01() < sigmoid(z) ? 1 : 0;
    }
  }

  if (p <= GroundTruth::kExactCap) gt.exact = exact_general_params(gt);
  return {BinaryDataset(std::move(rows)), std::move(gt)};
}

std::pair<BinaryDataset, GroundTruth> generate(const GraphSpec& spec, int n,
                                               InteractionKind tau, std::uint64_t seed) {
  return generate(random_dag(spec), n, tau, seed);
}

GeneralParams exact_general_params(const GroundTruth& gt) {
  const int p = gt.graph.p();
  if (p > GroundTruth::kExactCap)
    throw CapacityError("exact_general_params: p <= " +
                        std::to_string(GroundTruth::kExactCap) + " required");
  std::vector<std::vector<int>> parents(p);
  std::vector<InteractionMap> maps;
  maps.reserve(p);
  for (int v = 0; v < p; ++v) {
    parents[v] = gt.graph.parents(v);
    maps.emplace_back(gt.tau, static_cast<int>(parents[v].size()));
  }

  const std::size_t table = std::size_t{1} << p;
  Eigen::VectorXd probs(table);
  for (std::size_t config = 0; config < table; ++config) {
    double prob = 1.0;
    for (int v = 0; v < p; ++v) {
      const double z =
          gt.node_weights[v].dot(maps[v].features(parent_support(parents[v], config)));
      const double q = sigmoid(z);
      prob *= (config & (std::size_t{1} << v)) ? q : 1.0 - q;
    }
    probs[static_cast<Eigen::Index>(config)] = prob;
  }
  return GeneralParams(p, std::move(probs));
}

}  // namespace mvb
