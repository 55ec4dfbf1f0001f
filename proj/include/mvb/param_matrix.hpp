#pragma once

#include <Eigen/Dense>
#include <memory>

#include "mvb/dag.hpp"
#include "mvb/feature_map.hpp"
#include "mvb/subset_index.hpp"

namespace mvb {

// Learnable coefficient matrix, one column per node. Full mode stores all
// 2^p coefficients per column in graded-lex order with h^{S,j} = 0 whenever
// j is in S; first-order mode stores [intercept, x_1, ..., x_p] coefficients
// with h^{j,j} = 0.
enum class ParamMode { Full, FirstOrder };

class ParamMatrix {
 public:
  ParamMatrix(ParamMode mode, int p, Eigen::MatrixXd values);
  static ParamMatrix zeros(ParamMode mode, int p);
  static int feature_count(ParamMode mode, int p);

  ParamMode mode() const { return mode_; }
  int p() const { return p_; }
  int feature_count() const { return static_cast<int>(values_.rows()); }
  const Eigen::MatrixXd& values() const { return values_; }
  InteractionKind map_kind() const {
    return mode_ == ParamMode::Full ? InteractionKind::Full : InteractionKind::FirstOnly;
  }

  bool structural_zero(int feature, int column) const;
  // Zeroes every structurally constrained entry in place.
  static void project_structural_zeros(ParamMode mode, int p, Eigen::MatrixXd& values);

 private:
  ParamMode mode_;
  int p_;
  Eigen::MatrixXd values_;  // feature_count x p
  std::shared_ptr<const SubsetIndex> index_;  // full mode only
};

// Induced weighted adjacency: full mode [W]_ij = sum_{S : i in S} (h^{S,j})^2,
// first-order mode [W]_ij = |h^{i,j}|.
WeightedAdjacency induced_adjacency(const ParamMatrix& h);
// Unchecked hot-path variant used by the solver.
Eigen::MatrixXd induced_adjacency_values(ParamMode mode, int p,
                                         const Eigen::Ref<const Eigen::MatrixXd>& values);

}  // namespace mvb
