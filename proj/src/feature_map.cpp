#include "mvb/feature_map.hpp"

#include <set>
#include <stdexcept>

#include "mvb/errors.hpp"

namespace mvb {

InteractionKind interaction_kind_from_string(std::string_view name) {
  if (name == "full") return InteractionKind::Full;
  if (name == "first-only") return InteractionKind::FirstOnly;
  if (name == "first+second") return InteractionKind::FirstSecond;
  if (name == "first+pth") return InteractionKind::FirstPth;
  if (name == "first+second+pth") return InteractionKind::FirstSecondPth;
  if (name == "second-only") return InteractionKind::SecondOnly;
  if (name == "pth-only") return InteractionKind::PthOnly;
  throw std::invalid_argument("unknown interaction kind: " + std::string(name));
}

std::string to_string(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::Full: return "full";
    case InteractionKind::FirstOnly: return "first-only";
    case InteractionKind::FirstSecond: return "first+second";
    case InteractionKind::FirstPth: return "first+pth";
    case InteractionKind::FirstSecondPth: return "first+second+pth";
    case InteractionKind::SecondOnly: return "second-only";
    case InteractionKind::PthOnly: return "pth-only";
  }
  throw std::logic_error("unreachable");
}

namespace {

// Ascending r-combinations of {0,...,p-1}; lexicographic order on the
// element lists, which is exactly the graded-lex order within one grade.
void append_combinations(int p, int r, std::vector<Subset>& out) {
  if (r > p) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    Subset s = 0;
    for (int i : idx) s |= Subset{1} << i;
    out.push_back(s);
    int i = r - 1;
    while (i >= 0 && idx[i] == p - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < r; ++k) idx[k] = idx[k - 1] + 1;
  }
}

}  // namespace

InteractionMap::InteractionMap(InteractionKind kind, int p) : kind_(kind), p_(p) {
  if (p < 0) throw std::invalid_argument("InteractionMap: p must be nonnegative");
  if (p > 64) throw CapacityError("InteractionMap: p must be <= 64");
  if (kind == InteractionKind::Full && p > SubsetIndex::kMaxFullTable)
    throw CapacityError("InteractionMap: full map requires p <= " +
                        std::to_string(SubsetIndex::kMaxFullTable));

  std::set<int> orders;
  orders.insert(0);
  switch (kind) {
    case InteractionKind::Full:
      for (int r = 1; r <= p; ++r) orders.insert(r);
      break;
    case InteractionKind::FirstOnly:
      orders.insert(1);
      break;
    case InteractionKind::FirstSecond:
      orders.insert(1);
      orders.insert(2);
      break;
    case InteractionKind::FirstPth:
      orders.insert(1);
      orders.insert(p);
      break;
    case InteractionKind::FirstSecondPth:
      orders.insert(1);
      orders.insert(2);
      orders.insert(p);
      break;
    case InteractionKind::SecondOnly:
      orders.insert(2);
      break;
    case InteractionKind::PthOnly:
      orders.insert(p);
      break;
  }
  for (int r : orders) {
    if (r == 0) {
      active_.push_back(0);
    } else if (r <= p) {
      append_combinations(p, r, active_);
    }
  }
}

Eigen::VectorXd InteractionMap::features(Subset support) const {
  Eigen::VectorXd out(feature_count());
  for (int k = 0; k < feature_count(); ++k)
    out[k] = ((active_[k] & ~support) == 0) ? 1.0 : 0.0;
  return out;
}

Eigen::VectorXd InteractionMap::features(const Eigen::Ref<const Eigen::VectorXi>& x) const {
  if (static_cast<int>(x.size()) != p_)
    throw std::invalid_argument("InteractionMap::features: length mismatch");
  Subset support = 0;
  for (int i = 0; i < p_; ++i) {
    if (x[i] != 0 && x[i] != 1)
      throw std::domain_error("InteractionMap::features: entries must be 0 or 1");
    if (x[i] == 1) support |= Subset{1} << i;
  }
  return features(support);
}

Eigen::MatrixXd InteractionMap::design_matrix(
    const Eigen::Ref<const Eigen::MatrixXi>& rows) const {
  if (static_cast<int>(rows.cols()) != p_)
    throw std::invalid_argument("InteractionMap::design_matrix: column count mismatch");
  Eigen::MatrixXd out(rows.rows(), feature_count());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    Subset support = 0;
    for (int j = 0; j < p_; ++j) {
      const int v = rows(i, j);
      if (v != 0 && v != 1)
        throw std::domain_error("InteractionMap::design_matrix: entries must be 0 or 1");
      if (v == 1) support |= Subset{1} << j;
    }
    for (int k = 0; k < feature_count(); ++k)
      out(i, k) = ((active_[k] & ~support) == 0) ? 1.0 : 0.0;
  }
  return out;
}

Eigen::VectorXd InteractionMap::embed_full(
    const Eigen::Ref<const Eigen::VectorXd>& compact) const {
  if (compact.size() != feature_count())
    throw std::invalid_argument("InteractionMap::embed_full: length mismatch");
  SubsetIndex index(p_);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(index.size()));
  for (int k = 0; k < feature_count(); ++k)
    out[static_cast<Eigen::Index>(index.position_of(active_[k]))] = compact[k];
  return out;
}

}  // namespace mvb
