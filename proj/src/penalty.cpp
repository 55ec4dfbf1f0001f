#include "mvb/penalty.hpp"

#include <cmath>
#include <stdexcept>

namespace mvb {

PenaltyParams::PenaltyParams(double lambda_in, double delta_in)
    : lambda(lambda_in), delta(delta_in) {
  if (!(lambda > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("PenaltyParams: lambda and delta must be positive");
}

PenaltyValue quasi_mcp(double t, const PenaltyParams& pp) {
  const double a = std::abs(t);
  if (a >= pp.delta) return {pp.lambda * pp.delta / 2.0, 0.0};
  const double value = pp.lambda * (a - t * t / (2.0 * pp.delta));
  const double sign = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
  const double deriv = pp.lambda * sign * (1.0 - a / pp.delta);
  return {value, deriv};
}

AdjacencyPenalty adjacency_penalty(const Eigen::Ref<const Eigen::MatrixXd>& w,
                                   const PenaltyParams& pp) {
  const int p = static_cast<int>(w.rows());
  AdjacencyPenalty out{0.0, Eigen::MatrixXd::Zero(p, p)};
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      const PenaltyValue pv = quasi_mcp(w(i, j), pp);
      out.value += pv.value;
      out.deriv(i, j) = pv.deriv;
    }
  }
  return out;
}

Eigen::MatrixXd chain_adjacency_grad(ParamMode mode, int p,
                                     const Eigen::Ref<const Eigen::MatrixXd>& values,
                                     const Eigen::Ref<const Eigen::MatrixXd>& w_grad) {
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(values.rows(), values.cols());
  if (mode == ParamMode::FirstOrder) {
    // [W]_ij = |h^{i,j}|; derivative at 0 taken as 0.
    for (int j = 0; j < p; ++j) {
      for (int i = 0; i < p; ++i) {
        if (i == j) continue;
        const double v = values(i + 1, j);
        const double sign = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
        grad(i + 1, j) = w_grad(i, j) * sign;
      }
    }
    return grad;
  }
  // [W]_ij = sum_{S : i in S} (h^{S,j})^2, so each coefficient picks up
  // 2 h^{S,j} from every variable its subset contains.
  SubsetIndex index(p);
  for (int j = 0; j < p; ++j) {
    for (std::size_t k = 0; k < index.size(); ++k) {
      const double v = values(static_cast<Eigen::Index>(k), j);
      if (v == 0.0) continue;
      double acc = 0.0;
      for (Subset rest = index.subset_at(k); rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        if (i != j) acc += w_grad(i, j);
      }
      grad(static_cast<Eigen::Index>(k), j) = 2.0 * v * acc;
    }
  }
  return grad;
}

namespace {

template <typename Input>
ScoreResult regularized_impl(const ParamMatrix& h, const Input& input, const PenaltyParams& pp,
                             const InteractionMap& map, bool want_grad) {
  ScoreResult base;
  if constexpr (std::is_same_v<Input, BinaryDataset>) {
    base = want_grad ? score_with_grad(h, input, map)
                     : ScoreResult{score(h, input, map), {}};
  } else {
    base = want_grad ? population_score_with_grad(h, input, map)
                     : ScoreResult{population_score(h, input, map), {}};
  }
  const Eigen::MatrixXd w = induced_adjacency_values(h.mode(), h.p(), h.values());
  const AdjacencyPenalty pen = adjacency_penalty(w, pp);
  base.value += pen.value;
  if (want_grad) {
    base.grad += chain_adjacency_grad(h.mode(), h.p(), h.values(), pen.deriv);
    ParamMatrix::project_structural_zeros(h.mode(), h.p(), base.grad);
  }
  return base;
}

}  // namespace

double regularized_score(const ParamMatrix& h, const BinaryDataset& data,
                         const PenaltyParams& pp, const InteractionMap& map) {
  return regularized_impl(h, data, pp, map, false).value;
}

double regularized_score(const ParamMatrix& h, const GeneralParams& gp,
                         const PenaltyParams& pp, const InteractionMap& map) {
  return regularized_impl(h, gp, pp, map, false).value;
}

ScoreResult regularized_score_with_grad(const ParamMatrix& h, const BinaryDataset& data,
                                        const PenaltyParams& pp, const InteractionMap& map) {
  return regularized_impl(h, data, pp, map, true);
}

ScoreResult regularized_score_with_grad(const ParamMatrix& h, const GeneralParams& gp,
                                        const PenaltyParams& pp, const InteractionMap& map) {
  return regularized_impl(h, gp, pp, map, true);
}

}  // namespace mvb
