#include "mvb/subset_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mvb/errors.hpp"

namespace mvb {

bool graded_lex_less(Subset a, Subset b) {
  const int ca = subset_size(a);
  const int cb = subset_size(b);
  if (ca != cb) return ca < cb;
  // Equal cardinality: walk the ascending element lists.
  Subset x = a, y = b;
  while (x != 0 && y != 0) {
    const int ex = std::countr_zero(x);
    const int ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

SubsetIndex::SubsetIndex(int p) : p_(p) {
  if (p < 0) throw std::invalid_argument("SubsetIndex: p must be nonnegative");
  if (p > kMaxFullTable)
    throw CapacityError("SubsetIndex: full table requires p <= " +
                        std::to_string(kMaxFullTable) + ", got p = " + std::to_string(p));
  const std::size_t n = std::size_t{1} << p;
  subset_of_pos_.resize(n);
  std::iota(subset_of_pos_.begin(), subset_of_pos_.end(), Subset{0});
  std::sort(subset_of_pos_.begin(), subset_of_pos_.end(), graded_lex_less);
  pos_of_subset_.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    pos_of_subset_[subset_of_pos_[pos]] = static_cast<std::uint32_t>(pos);
}

std::size_t SubsetIndex::position_of(Subset s) const {
  if (p_ < 64 && (s >> p_) != 0)
    throw std::invalid_argument("SubsetIndex: subset contains an element outside [p]");
  return pos_of_subset_[s];
}

Subset SubsetIndex::subset_at(std::size_t pos) const {
  if (pos >= subset_of_pos_.size())
    throw std::out_of_range("SubsetIndex: position out of range");
  return subset_of_pos_[pos];
}

}  // namespace mvb
