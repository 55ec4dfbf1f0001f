#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "mvb/subset_index.hpp"

namespace mvb {

// Which interaction orders of the monomial features B^S(x) are active.
// "pth" always refers to the single highest-order monomial over all p
// variables the map is built on (the product of all of them).
enum class InteractionKind {
  Full,            // every subset, 2^p features
  FirstOnly,       // [1, x_1, ..., x_p]
  FirstSecond,     // constant + first + second order
  FirstPth,        // constant + first + highest order
  FirstSecondPth,  // constant + first + second + highest order
  SecondOnly,      // constant + second order
  PthOnly,         // constant + highest order
};

InteractionKind interaction_kind_from_string(std::string_view name);
std::string to_string(InteractionKind kind);

// Monomial feature map over p binary variables with a selectable set of
// active interaction orders. Features are the active B^S(x) = prod_{j in S}
// x_j, listed in graded-lexicographic order of S; the constant B^empty = 1
// is always active and always first. p = 0 is valid and yields just the
// constant.
class InteractionMap {
 public:
  InteractionMap(InteractionKind kind, int p);

  InteractionKind kind() const { return kind_; }
  int p() const { return p_; }
  int feature_count() const { return static_cast<int>(active_.size()); }
  const std::vector<Subset>& active_subsets() const { return active_; }

  // Feature vector of one configuration given as its support bitmask.
  Eigen::VectorXd features(Subset support) const;
  // Feature vector of a 0/1 vector; throws std::domain_error on other values.
  Eigen::VectorXd features(const Eigen::Ref<const Eigen::VectorXi>& x) const;
  // Row-wise application to an n x p matrix of 0/1 entries.
  Eigen::MatrixXd design_matrix(const Eigen::Ref<const Eigen::MatrixXi>& rows) const;

  // Scatter a compact feature/coefficient vector into the full 2^p
  // graded-lex layout, zeros on inactive blocks. Requires p <= 16.
  Eigen::VectorXd embed_full(const Eigen::Ref<const Eigen::VectorXd>& compact) const;

 private:
  InteractionKind kind_;
  int p_;
  std::vector<Subset> active_;
};

}  // namespace mvb
