#include "mvb/param_matrix.hpp"

#include <stdexcept>

namespace mvb {

int ParamMatrix::feature_count(ParamMode mode, int p) {
  return mode == ParamMode::Full ? (1 << p) : p + 1;
}

ParamMatrix::ParamMatrix(ParamMode mode, int p, Eigen::MatrixXd values)
    : mode_(mode), p_(p), values_(std::move(values)) {
  if (p < 1) throw std::invalid_argument("ParamMatrix: node count must be positive");
  if (mode_ == ParamMode::Full) index_ = std::make_shared<const SubsetIndex>(p);
  if (values_.rows() != feature_count(mode, p) || values_.cols() != p)
    throw std::invalid_argument("ParamMatrix: wrong shape");
  if (!values_.allFinite()) throw std::invalid_argument("ParamMatrix: non-finite entry");
  for (int j = 0; j < p_; ++j)
    for (int k = 0; k < feature_count(); ++k)
      if (structural_zero(k, j) && values_(k, j) != 0.0)
        throw std::invalid_argument("ParamMatrix: structural zero violated at feature " +
                                    std::to_string(k) + ", column " + std::to_string(j));
}

ParamMatrix ParamMatrix::zeros(ParamMode mode, int p) {
  return ParamMatrix(mode, p, Eigen::MatrixXd::Zero(feature_count(mode, p), p));
}

bool ParamMatrix::structural_zero(int feature, int column) const {
  if (mode_ == ParamMode::FirstOrder) return feature == column + 1;
  return (index_->subset_at(feature) >> column) & Subset{1};
}

void ParamMatrix::project_structural_zeros(ParamMode mode, int p, Eigen::MatrixXd& values) {
  if (mode == ParamMode::FirstOrder) {
    for (int j = 0; j < p; ++j) values(j + 1, j) = 0.0;
    return;
  }
  SubsetIndex index(p);
  for (int j = 0; j < p; ++j)
    for (std::size_t k = 0; k < index.size(); ++k)
      if ((index.subset_at(k) >> j) & Subset{1}) values(static_cast<Eigen::Index>(k), j) = 0.0;
}

Eigen::MatrixXd induced_adjacency_values(ParamMode mode, int p,
                                         const Eigen::Ref<const Eigen::MatrixXd>& values) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(p, p);
  if (mode == ParamMode::FirstOrder) {
    for (int j = 0; j < p; ++j)
      for (int i = 0; i < p; ++i)
        if (i != j) w(i, j) = std::abs(values(i + 1, j));
    return w;
  }
  SubsetIndex index(p);
  for (int j = 0; j < p; ++j) {
    for (std::size_t k = 0; k < index.size(); ++k) {
      const double v = values(static_cast<Eigen::Index>(k), j);
      if (v == 0.0) continue;
      const double sq = v * v;
      for (Subset rest = index.subset_at(k); rest != 0; rest &= rest - 1)
        w(std::countr_zero(rest), j) += sq;
    }
  }
  w.diagonal().setZero();
  return w;
}

WeightedAdjacency induced_adjacency(const ParamMatrix& h) {
  return WeightedAdjacency(induced_adjacency_values(h.mode(), h.p(), h.values()));
}

}  // namespace mvb
