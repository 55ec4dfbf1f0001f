#include "mvb/acyclicity.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace mvb {

AcyclicityResult acyclicity_value_and_grad(const Eigen::Ref<const Eigen::MatrixXd>& w,
                                           AcyclicityKind kind, double logdet_s) {
  if (w.rows() != w.cols())
    throw std::invalid_argument("acyclicity_value_and_grad: matrix must be square");
  if (!w.allFinite())
    throw std::domain_error("acyclicity_value_and_grad: non-finite entry");
  const int p = static_cast<int>(w.rows());
  const Eigen::MatrixXd squared = w.array().square();

  if (kind == AcyclicityKind::ExpmTrace) {
    const Eigen::MatrixXd e = squared.exp();  // Pade scaling-and-squaring
    const double value = std::max(0.0, e.trace() - static_cast<double>(p));
    const Eigen::MatrixXd grad = 2.0 * e.transpose().cwiseProduct(w);
    return {value, grad};
  }

  // Log-determinant variant: requires sI - W o W to stay an M-matrix.
  Eigen::MatrixXd m = logdet_s * Eigen::MatrixXd::Identity(p, p) - squared;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const double det = lu.determinant();
  if (!(det > 0.0))
    throw std::domain_error(
        "acyclicity_value_and_grad: spectral radius too large for the log-det variant");
  const double value =
      std::max(0.0, static_cast<double>(p) * std::log(logdet_s) - std::log(det));
  const Eigen::MatrixXd inv = lu.inverse();
  const Eigen::MatrixXd grad = 2.0 * inv.transpose().cwiseProduct(w);
  return {value, grad};
}

}  // namespace mvb
