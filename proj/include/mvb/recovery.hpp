#pragma once

#include <utility>
#include <vector>

#include "mvb/dag.hpp"
#include "mvb/distribution.hpp"

namespace mvb {

// One graph-parameter pair (G_pi, f_pi): the unique structural equation
// model along `order` that reproduces the source distribution exactly.
struct RecoveredModel {
  std::vector<int> order;
  Dag graph;
  std::vector<ConditionalCoeffs> coeffs;  // one block per position, j = 1..p
};

// Default tolerance for the edge criterion: a predecessor is a parent when
// the sum of squares of its interaction coefficients exceeds this.
inline constexpr double kEdgeTolerance = 1e-8;

// Enumeration over all p! orders is capped here.
inline constexpr int kEnumerationCap = 8;

// Parent set (original node ids, ascending) of the node at position j.
std::pair<std::vector<int>, ConditionalCoeffs> recover_parents(const GeneralParams& gp,
                                                               const std::vector<int>& order,
                                                               int j,
                                                               double tol = kEdgeTolerance);

RecoveredModel recover_dag(const GeneralParams& gp, const std::vector<int>& order,
                           double tol = kEdgeTolerance);

// E(p): one RecoveredModel per permutation, in lexicographic order of the
// permutations. Orders are processed concurrently; the result is
// order-stable.
std::vector<RecoveredModel> enumerate_equivalence_class(const GeneralParams& gp,
                                                        double tol = kEdgeTolerance);

// E_min(p): members attaining the minimum edge count.
std::vector<RecoveredModel> minimal_equivalence_class(const std::vector<RecoveredModel>& models);

}  // namespace mvb
