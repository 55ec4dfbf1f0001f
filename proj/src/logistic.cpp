#include "mvb/logistic.hpp"

#include <cmath>
#include <stdexcept>

#include "mvb/util.hpp"

namespace mvb {

namespace {

constexpr double kGradTolerance = 1e-8;
constexpr int kMaxIterations = 100;
// |z| beyond this means fitted probabilities are numerically 0/1; with no
// ridge that signals separation.
constexpr double kSaturationLogit = 30.0;

double loss(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& rw,
            double ridge, const Eigen::VectorXd& w) {
  const Eigen::VectorXd z = x * w;
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i)
    total += rw[i] * (log1pexp(z[i]) - y[i] * z[i]);
  return total + 0.5 * ridge * w.squaredNorm();
}

}  // namespace

LogisticFit logistic_fit(const Eigen::Ref<const Eigen::MatrixXd>& features,
                         const Eigen::Ref<const Eigen::VectorXd>& labels, double ridge) {
  const Eigen::VectorXd rw =
      Eigen::VectorXd::Constant(features.rows(), 1.0 / static_cast<double>(features.rows()));
  return logistic_fit(features, labels, rw, ridge);
}

LogisticFit logistic_fit(const Eigen::Ref<const Eigen::MatrixXd>& features,
                         const Eigen::Ref<const Eigen::VectorXd>& labels,
                         const Eigen::Ref<const Eigen::VectorXd>& row_weights, double ridge) {
  const Eigen::Index n = features.rows();
  const Eigen::Index m = features.cols();
  if (n < 1) throw std::invalid_argument("logistic_fit: need at least one row");
  if (labels.size() != n || row_weights.size() != n)
    throw std::invalid_argument("logistic_fit: size mismatch");
  for (Eigen::Index i = 0; i < n; ++i)
    if (labels[i] != 0.0 && labels[i] != 1.0)
      throw std::domain_error("logistic_fit: labels must be 0 or 1");
  if (ridge < 0.0) throw std::invalid_argument("logistic_fit: ridge must be nonnegative");

  LogisticFit fit;
  fit.weights = Eigen::VectorXd::Zero(m);
  double current = loss(features, labels, row_weights, ridge, fit.weights);

  for (int it = 0; it < kMaxIterations; ++it) {
    const Eigen::VectorXd z = features * fit.weights;
    Eigen::VectorXd mu(n), curv(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      mu[i] = sigmoid(z[i]);
      curv[i] = row_weights[i] * mu[i] * (1.0 - mu[i]);
    }
    const Eigen::VectorXd grad =
        features.transpose() * (row_weights.cwiseProduct(mu - labels)) + ridge * fit.weights;
    fit.grad_norm = grad.norm();
    fit.iterations = it;
    if (fit.grad_norm <= kGradTolerance) {
      fit.converged = true;
      break;
    }

    Eigen::MatrixXd hess = features.transpose() * curv.asDiagonal() * features;
    hess.diagonal().array() += ridge;
    const Eigen::VectorXd step = hess.ldlt().solve(-grad);
    if (!step.allFinite()) break;

    double t = 1.0;
    bool accepted = false;
    const double slope = grad.dot(step);
    for (int half = 0; half < 40; ++half) {
      const Eigen::VectorXd cand = fit.weights + t * step;
      const double cand_loss = loss(features, labels, row_weights, ridge, cand);
      if (std::isfinite(cand_loss) && cand_loss <= current + 1e-4 * t * slope) {
        fit.weights = cand;
        current = cand_loss;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }

  if (fit.converged && ridge == 0.0) {
    const Eigen::VectorXd z = features * fit.weights;
    if (z.cwiseAbs().maxCoeff() > kSaturationLogit) fit.converged = false;
  }
  return fit;
}

}  // namespace mvb
