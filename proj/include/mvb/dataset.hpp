#pragma once

#include <Eigen/Dense>

#include "mvb/subset_index.hpp"

namespace mvb {

// n x p matrix of binary observations, one sample per row.
class BinaryDataset {
 public:
  explicit BinaryDataset(Eigen::MatrixXi rows);
  static BinaryDataset empty(int p);

  int n() const { return static_cast<int>(rows_.rows()); }
  int p() const { return static_cast<int>(rows_.cols()); }
  const Eigen::MatrixXi& rows() const { return rows_; }

  Eigen::VectorXd column(int j) const { return rows_.col(j).cast<double>(); }
  Subset row_support(int i) const;

 private:
  Eigen::MatrixXi rows_;
};

}  // namespace mvb
