#include "mvb/dataset.hpp"

#include <stdexcept>

namespace mvb {

BinaryDataset::BinaryDataset(Eigen::MatrixXi rows) : rows_(std::move(rows)) {
  for (Eigen::Index i = 0; i < rows_.rows(); ++i)
    for (Eigen::Index j = 0; j < rows_.cols(); ++j)
      if (rows_(i, j) != 0 && rows_(i, j) != 1)
        throw std::domain_error("BinaryDataset: entries must be 0 or 1");
}

BinaryDataset BinaryDataset::empty(int p) {
  return BinaryDataset(Eigen::MatrixXi(0, p));
}

Subset BinaryDataset::row_support(int i) const {
  Subset s = 0;
  for (int j = 0; j < p(); ++j)
    if (rows_(i, j) == 1) s |= Subset{1} << j;
  return s;
}

}  // namespace mvb
