#pragma once

#include <Eigen/Dense>

#include "mvb/dataset.hpp"
#include "mvb/distribution.hpp"
#include "mvb/feature_map.hpp"
#include "mvb/param_matrix.hpp"

namespace mvb {

struct ScoreResult {
  double value;
  Eigen::MatrixXd grad;  // feature_count x p, zero at structural zeros
};

// Averaged logistic loss over all columns,
//   (1/n) sum_j sum_i [log(1 + exp(z_ij)) - X_ij z_ij],  z = Phi(X) H.
double score(const ParamMatrix& h, const BinaryDataset& data, const InteractionMap& map);
ScoreResult score_with_grad(const ParamMatrix& h, const BinaryDataset& data,
                            const InteractionMap& map);

// Exact expectation of the score under gp: every configuration weighted by
// its probability. Strictly convex in the free coefficients when gp > 0.
double population_score(const ParamMatrix& h, const GeneralParams& gp,
                        const InteractionMap& map);
ScoreResult population_score_with_grad(const ParamMatrix& h, const GeneralParams& gp,
                                       const InteractionMap& map);

// Shared weighted core: rows of `design` are feature vectors, `labels` the
// matching 0/1 targets per column, `row_weights` sum to one (or 1/n each).
ScoreResult weighted_logistic_score(const Eigen::Ref<const Eigen::MatrixXd>& design,
                                    const Eigen::Ref<const Eigen::MatrixXd>& labels,
                                    const Eigen::Ref<const Eigen::VectorXd>& row_weights,
                                    const Eigen::Ref<const Eigen::MatrixXd>& coeffs,
                                    bool want_grad);

// All 2^p configurations as rows (configuration-index order).
Eigen::MatrixXi configuration_rows(int p);

}  // namespace mvb
