#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mvb {

// A subset of the node set {0, ..., p-1}; bit i is set iff node i belongs.
using Subset = std::uint64_t;

inline int subset_size(Subset s) { return std::popcount(s); }

// Graded-lexicographic comparison: smaller cardinality first, ties broken
// lexicographically on the ascending element lists.
bool graded_lex_less(Subset a, Subset b);

// Bijection between subsets of {0,...,p-1} and positions 0..2^p-1 in
// graded-lexicographic order: position 0 is the empty set, then singletons
// in ascending order, then pairs, and so on up to the full set.
class SubsetIndex {
 public:
  // Full 2^p tables are capped at p <= kMaxFullTable.
  static constexpr int kMaxFullTable = 16;

  explicit SubsetIndex(int p);

  int p() const { return p_; }
  std::size_t size() const { return subset_of_pos_.size(); }

  std::size_t position_of(Subset s) const;
  Subset subset_at(std::size_t pos) const;

 private:
  int p_ = 0;
  std::vector<Subset> subset_of_pos_;
  std::vector<std::uint32_t> pos_of_subset_;
};

}  // namespace mvb
