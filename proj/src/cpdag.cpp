#include "mvb/cpdag.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace mvb {

namespace {

// Pairwise edge status used while closing orientations under Meek's rules.
enum Status : char { kNone = 0, kDirected = 1, kUndirected = 2 };

class Pdag {
 public:
  explicit Pdag(int p) : p_(p), status_(static_cast<std::size_t>(p) * p, kNone) {}

  void set_undirected(int a, int b) {
    at(a, b) = kUndirected;
    at(b, a) = kUndirected;
  }
  // Orients a - b as a -> b.
  void orient(int a, int b) {
    at(a, b) = kDirected;
    at(b, a) = kNone;
  }
  bool directed(int a, int b) const { return at(a, b) == kDirected; }
  bool undirected(int a, int b) const { return at(a, b) == kUndirected; }
  bool adjacent(int a, int b) const { return at(a, b) != kNone || at(b, a) != kNone; }
  int p() const { return p_; }

 private:
  char& at(int a, int b) { return status_[static_cast<std::size_t>(a) * p_ + b]; }
  const char& at(int a, int b) const { return status_[static_cast<std::size_t>(a) * p_ + b]; }

  int p_;
  std::vector<char> status_;
};

// Meek rules R1-R3; R4 is only needed when orientations come from
// background knowledge rather than v-structures.
void close_under_meek(Pdag& g) {
  const int p = g.p();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        if (!g.undirected(a, b)) continue;
        // R1: c -> a, a - b, c and b nonadjacent  =>  a -> b.
        for (int c = 0; c < p; ++c) {
          if (g.directed(c, a) && !g.adjacent(c, b)) {
            g.orient(a, b);
            changed = true;
            break;
          }
        }
        if (!g.undirected(a, b)) continue;
        // R2: a -> c -> b with a - b  =>  a -> b.
        for (int c = 0; c < p; ++c) {
          if (g.directed(a, c) && g.directed(c, b)) {
            g.orient(a, b);
            changed = true;
            break;
          }
        }
        if (!g.undirected(a, b)) continue;
        // R3: a - c, a - d, c -> b, d -> b, c and d nonadjacent  =>  a -> b.
        bool oriented = false;
        for (int c = 0; c < p && !oriented; ++c) {
          if (!(g.undirected(a, c) && g.directed(c, b))) continue;
          for (int d = c + 1; d < p; ++d) {
            if (g.undirected(a, d) && g.directed(d, b) && !g.adjacent(c, d)) {
              g.orient(a, b);
              changed = true;
              oriented = true;
              break;
            }
          }
        }
      }
    }
  }
}

std::set<std::tuple<int, int, int>> v_structures(const Dag& g) {
  std::set<std::tuple<int, int, int>> out;  // (min parent, collider, max parent)
  for (int k = 0; k < g.p(); ++k) {
    const auto pa = g.parents(k);
    for (std::size_t a = 0; a < pa.size(); ++a)
      for (std::size_t b = a + 1; b < pa.size(); ++b)
        if (!g.has_edge(pa[a], pa[b]) && !g.has_edge(pa[b], pa[a]))
          out.emplace(pa[a], k, pa[b]);
  }
  return out;
}

}  // namespace

Cpdag::Cpdag(int p, std::set<Edge> directed, std::set<Edge> undirected)
    : p_(p), directed_(std::move(directed)), undirected_(std::move(undirected)) {
  if (p < 1) throw std::invalid_argument("Cpdag: node count must be positive");
  std::set<Edge> skeleton;
  for (const auto& [a, b] : directed_) {
    if (a < 0 || a >= p || b < 0 || b >= p || a == b)
      throw std::invalid_argument("Cpdag: bad directed edge");
    if (!skeleton.insert({std::min(a, b), std::max(a, b)}).second)
      throw std::invalid_argument("Cpdag: multi-edge in skeleton");
  }
  for (const auto& [a, b] : undirected_) {
    if (a < 0 || a >= p || b < 0 || b >= p || a >= b)
      throw std::invalid_argument("Cpdag: undirected edges must have i < j");
    if (!skeleton.insert({a, b}).second)
      throw std::invalid_argument("Cpdag: multi-edge in skeleton");
  }
}

Cpdag cpdag(const Dag& g) {
  Pdag pdag(g.p());
  for (const auto& [from, to] : g.edges()) pdag.set_undirected(from, to);
  for (const auto& [a, k, b] : v_structures(g)) {
    pdag.orient(a, k);
    pdag.orient(b, k);
  }
  close_under_meek(pdag);

  std::set<Edge> directed, undirected;
  for (const auto& [from, to] : g.edges()) {
    if (pdag.directed(from, to))
      directed.insert({from, to});
    else
      undirected.insert({std::min(from, to), std::max(from, to)});
  }
  return Cpdag(g.p(), std::move(directed), std::move(undirected));
}

bool markov_equivalent(const Dag& a, const Dag& b) {
  if (a.p() != b.p())
    throw std::invalid_argument("markov_equivalent: node counts differ");
  std::set<Edge> skel_a, skel_b;
  for (const auto& [i, j] : a.edges()) skel_a.insert({std::min(i, j), std::max(i, j)});
  for (const auto& [i, j] : b.edges()) skel_b.insert({std::min(i, j), std::max(i, j)});
  return skel_a == skel_b && v_structures(a) == v_structures(b);
}

int shd_cpdag(const Cpdag& a, const Cpdag& b) {
  if (a.p() != b.p()) throw std::invalid_argument("shd_cpdag: node counts differ");
  const int p = a.p();
  // 0 none, 1 i->j, 2 j->i, 3 undirected, per unordered pair (i < j).
  auto statuses = [p](const Cpdag& c) {
    std::vector<char> s(static_cast<std::size_t>(p) * p, 0);
    for (const auto& [i, j] : c.directed())
      s[static_cast<std::size_t>(std::min(i, j)) * p + std::max(i, j)] = i < j ? 1 : 2;
    for (const auto& [i, j] : c.undirected()) s[static_cast<std::size_t>(i) * p + j] = 3;
    return s;
  };
  const auto sa = statuses(a), sb = statuses(b);
  int count = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (sa[static_cast<std::size_t>(i) * p + j] != sb[static_cast<std::size_t>(i) * p + j])
        ++count;
  return count;
}

}  // namespace mvb
