#pragma once

#include <set>
#include <utility>

#include "mvb/dag.hpp"

namespace mvb {

// Completed partially directed acyclic graph: compelled edges directed,
// reversible edges undirected. Undirected pairs are stored with i < j.
class Cpdag {
 public:
  Cpdag(int p, std::set<Edge> directed, std::set<Edge> undirected);

  int p() const { return p_; }
  const std::set<Edge>& directed() const { return directed_; }
  const std::set<Edge>& undirected() const { return undirected_; }
  int edge_count() const {
    return static_cast<int>(directed_.size() + undirected_.size());
  }

  bool operator==(const Cpdag& other) const {
    return p_ == other.p_ && directed_ == other.directed_ && undirected_ == other.undirected_;
  }

 private:
  int p_;
  std::set<Edge> directed_;
  std::set<Edge> undirected_;
};

// CPDAG of the Markov equivalence class of g: v-structure orientations
// closed under Meek's rules, remaining edges undirected.
Cpdag cpdag(const Dag& g);

// Same skeleton and same v-structures (equivalently, identical CPDAGs).
bool markov_equivalent(const Dag& a, const Dag& b);

// Structural Hamming distance over unordered node pairs: a pair whose edge
// status differs (absent / i->j / j->i / undirected) counts 1.
int shd_cpdag(const Cpdag& a, const Cpdag& b);

}  // namespace mvb
