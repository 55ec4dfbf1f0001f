#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace mvb {

using Edge = std::pair<int, int>;  // (from, to), 0-based node ids

bool is_acyclic(int p, const std::vector<Edge>& edges);
bool is_acyclic(const Eigen::Ref<const Eigen::MatrixXd>& weights);  // nonzero pattern

// Directed acyclic graph; acyclicity and absence of self-loops are checked
// on construction.
class Dag {
 public:
  Dag(int p, std::vector<Edge> edges);
  static Dag empty(int p) { return Dag(p, {}); }

  int p() const { return p_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int from, int to) const { return adj_[index(from, to)]; }

  std::vector<int> parents(int node) const;   // ascending
  std::vector<int> children(int node) const;  // ascending
  // Kahn's algorithm with smallest-index tie-breaking.
  std::vector<int> topological_order() const;
  Eigen::MatrixXi adjacency() const;

  bool operator==(const Dag& other) const {
    return p_ == other.p_ && edges_ == other.edges_;
  }

 private:
  std::size_t index(int from, int to) const {
    return static_cast<std::size_t>(from) * p_ + to;
  }

  int p_;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
};

// p x p matrix of nonnegative edge weights with an exactly zero diagonal.
class WeightedAdjacency {
 public:
  explicit WeightedAdjacency(Eigen::MatrixXd entries);

  int p() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

inline bool is_acyclic(const WeightedAdjacency& w) { return is_acyclic(w.entries()); }
inline bool is_acyclic(const Dag&) { return true; }  // guaranteed by construction

}  // namespace mvb
