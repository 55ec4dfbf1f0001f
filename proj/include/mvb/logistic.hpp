#pragma once

#include <Eigen/Dense>

namespace mvb {

struct LogisticFit {
  Eigen::VectorXd weights;
  bool converged = false;
  int iterations = 0;
  double grad_norm = 0.0;
};

// Newton/IRLS with step halving for
//   sum_i rw_i [log(1 + exp(z_i)) - y_i z_i] + (ridge/2) ||w||^2,  z = X w.
// Converges when the gradient norm drops below 1e-8, up to 100 iterations.
// With ridge = 0 and separable data the minimizer is at infinity; the fit
// is returned with converged = false and the last finite iterate.
LogisticFit logistic_fit(const Eigen::Ref<const Eigen::MatrixXd>& features,
                         const Eigen::Ref<const Eigen::VectorXd>& labels, double ridge);
LogisticFit logistic_fit(const Eigen::Ref<const Eigen::MatrixXd>& features,
                         const Eigen::Ref<const Eigen::VectorXd>& labels,
                         const Eigen::Ref<const Eigen::VectorXd>& row_weights, double ridge);

}  // namespace mvb
