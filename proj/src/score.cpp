#include "mvb/score.hpp"

#include <stdexcept>

#include "mvb/util.hpp"

namespace mvb {

namespace {

void check_consistency(const ParamMatrix& h, const InteractionMap& map, int data_p) {
  if (map.kind() != h.map_kind())
    throw std::invalid_argument("score: interaction map inconsistent with parameter mode");
  if (map.p() != h.p() || data_p != h.p())
    throw std::invalid_argument("score: dimension mismatch");
}

}  // namespace

Eigen::MatrixXi configuration_rows(int p) {
  const int n = 1 << p;
  Eigen::MatrixXi rows(n, p);
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < p; ++j) rows(c, j) = (c >> j) & 1;
  return rows;
}

ScoreResult weighted_logistic_score(const Eigen::Ref<const Eigen::MatrixXd>& design,
                                    const Eigen::Ref<const Eigen::MatrixXd>& labels,
                                    const Eigen::Ref<const Eigen::VectorXd>& row_weights,
                                    const Eigen::Ref<const Eigen::MatrixXd>& coeffs,
                                    bool want_grad) {
  const Eigen::MatrixXd z = design * coeffs;  // n x p
  double value = 0.0;
  Eigen::MatrixXd residual;
  if (want_grad) residual.resize(z.rows(), z.cols());
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    const double w = row_weights[i];
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      value += w * (log1pexp(z(i, j)) - labels(i, j) * z(i, j));
      if (want_grad) residual(i, j) = w * (sigmoid(z(i, j)) - labels(i, j));
    }
  }
  ScoreResult out{value, {}};
  if (want_grad) out.grad = design.transpose() * residual;
  return out;
}

namespace {

ScoreResult sample_score(const ParamMatrix& h, const BinaryDataset& data,
                         const InteractionMap& map, bool want_grad) {
  check_consistency(h, map, data.p());
  if (data.n() < 1) throw std::invalid_argument("score: empty dataset");
  const Eigen::MatrixXd design = map.design_matrix(data.rows());
  const Eigen::MatrixXd labels = data.rows().cast<double>();
  const Eigen::VectorXd w =
      Eigen::VectorXd::Constant(data.n(), 1.0 / static_cast<double>(data.n()));
  ScoreResult out = weighted_logistic_score(design, labels, w, h.values(), want_grad);
  if (want_grad) ParamMatrix::project_structural_zeros(h.mode(), h.p(), out.grad);
  return out;
}

ScoreResult pop_score(const ParamMatrix& h, const GeneralParams& gp,
                      const InteractionMap& map, bool want_grad) {
  check_consistency(h, map, gp.p());
  const Eigen::MatrixXi rows = configuration_rows(gp.p());
  const Eigen::MatrixXd design = map.design_matrix(rows);
  const Eigen::MatrixXd labels = rows.cast<double>();
  ScoreResult out = weighted_logistic_score(design, labels, gp.probs(), h.values(), want_grad);
  if (want_grad) ParamMatrix::project_structural_zeros(h.mode(), h.p(), out.grad);
  return out;
}

}  // namespace

double score(const ParamMatrix& h, const BinaryDataset& data, const InteractionMap& map) {
  return sample_score(h, data, map, false).value;
}

ScoreResult score_with_grad(const ParamMatrix& h, const BinaryDataset& data,
                            const InteractionMap& map) {
  return sample_score(h, data, map, true);
}

double population_score(const ParamMatrix& h, const GeneralParams& gp,
                        const InteractionMap& map) {
  return pop_score(h, gp, map, false).value;
}

ScoreResult population_score_with_grad(const ParamMatrix& h, const GeneralParams& gp,
                                       const InteractionMap& map) {
  return pop_score(h, gp, map, true);
}

}  // namespace mvb
