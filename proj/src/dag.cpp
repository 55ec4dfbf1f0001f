#include "mvb/dag.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace mvb {

namespace {

bool kahn_is_acyclic(int p, const std::vector<std::vector<int>>& children) {
  std::vector<int> indegree(p, 0);
  for (const auto& ch : children)
    for (int c : ch) ++indegree[c];
  std::vector<int> stack;
  for (int v = 0; v < p; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int c : children[v])
      if (--indegree[c] == 0) stack.push_back(c);
  }
  return removed == p;
}

}  // namespace

bool is_acyclic(int p, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> children(p);
  for (const auto& [from, to] : edges) {
    if (from == to) return false;
    children[from].push_back(to);
  }
  return kahn_is_acyclic(p, children);
}

bool is_acyclic(const Eigen::Ref<const Eigen::MatrixXd>& weights) {
  const int p = static_cast<int>(weights.rows());
  std::vector<std::vector<int>> children(p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && weights(i, j) != 0.0) children[i].push_back(j);
  return kahn_is_acyclic(p, children);
}

Dag::Dag(int p, std::vector<Edge> edges) : p_(p), edges_(std::move(edges)) {
  if (p < 1) throw std::invalid_argument("Dag: node count must be positive");
  adj_.assign(static_cast<std::size_t>(p) * p, 0);
  for (const auto& [from, to] : edges_) {
    if (from < 0 || from >= p || to < 0 || to >= p)
      throw std::invalid_argument("Dag: edge endpoint out of range");
    if (from == to) throw std::invalid_argument("Dag: self-loops are not allowed");
    if (adj_[index(from, to)]) throw std::invalid_argument("Dag: duplicate edge");
    adj_[index(from, to)] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
  if (!mvb::is_acyclic(p_, edges_)) throw std::invalid_argument("Dag: edge set has a cycle");
}

std::vector<int> Dag::parents(int node) const {
  std::vector<int> out;
  for (int i = 0; i < p_; ++i)
    if (adj_[index(i, node)]) out.push_back(i);
  return out;
}

std::vector<int> Dag::children(int node) const {
  std::vector<int> out;
  for (int j = 0; j < p_; ++j)
    if (adj_[index(node, j)]) out.push_back(j);
  return out;
}

std::vector<int> Dag::topological_order() const {
  std::vector<int> indegree(p_, 0);
  for (const auto& [from, to] : edges_) ++indegree[to];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < p_; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(p_);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int c : children(v))
      if (--indegree[c] == 0) ready.push(c);
  }
  return order;
}

Eigen::MatrixXi Dag::adjacency() const {
  Eigen::MatrixXi out = Eigen::MatrixXi::Zero(p_, p_);
  for (const auto& [from, to] : edges_) out(from, to) = 1;
  return out;
}

WeightedAdjacency::WeightedAdjacency(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("WeightedAdjacency: matrix must be square");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0.0)
      throw std::invalid_argument("WeightedAdjacency: diagonal must be exactly zero");
    for (Eigen::Index j = 0; j < entries_.cols(); ++j)
      if (std::isnan(entries_(i, j)) || entries_(i, j) < 0.0)
        throw std::invalid_argument("WeightedAdjacency: entries must be nonnegative");
  }
}

}  // namespace mvb
