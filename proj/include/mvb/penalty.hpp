#pragma once

#include "mvb/dataset.hpp"
#include "mvb/distribution.hpp"
#include "mvb/feature_map.hpp"
#include "mvb/param_matrix.hpp"
#include "mvb/score.hpp"

namespace mvb {

struct PenaltyParams {
  double lambda;
  double delta;

  PenaltyParams(double lambda_in, double delta_in);
};

struct PenaltyValue {
  double value;
  double deriv;
};

// Quasi-MCP: lambda [ (|t| - t^2/(2 delta)) 1(|t| < delta) + (delta/2) 1(|t| >= delta) ].
// Quadratic near zero, saturating at lambda * delta / 2. The derivative at
// t = 0 is reported as 0 (minimal-norm element of the subgradient [-lambda, lambda]).
PenaltyValue quasi_mcp(double t, const PenaltyParams& pp);

// score + sum_{i != j} quasi_mcp([W(H)]_ij).
double regularized_score(const ParamMatrix& h, const BinaryDataset& data,
                         const PenaltyParams& pp, const InteractionMap& map);
double regularized_score(const ParamMatrix& h, const GeneralParams& gp,
                         const PenaltyParams& pp, const InteractionMap& map);
ScoreResult regularized_score_with_grad(const ParamMatrix& h, const BinaryDataset& data,
                                        const PenaltyParams& pp, const InteractionMap& map);
ScoreResult regularized_score_with_grad(const ParamMatrix& h, const GeneralParams& gp,
                                        const PenaltyParams& pp, const InteractionMap& map);

// Penalty applied to an induced adjacency; `deriv` holds d/dW entries.
// Shared by the solver so the chain rule through W(H) lives in one place.
struct AdjacencyPenalty {
  double value;
  Eigen::MatrixXd deriv;  // p x p, zero diagonal
};
AdjacencyPenalty adjacency_penalty(const Eigen::Ref<const Eigen::MatrixXd>& w,
                                   const PenaltyParams& pp);

// Chain rule: maps d/dW terms into d/dH given the parameter layout.
Eigen::MatrixXd chain_adjacency_grad(ParamMode mode, int p,
                                     const Eigen::Ref<const Eigen::MatrixXd>& values,
                                     const Eigen::Ref<const Eigen::MatrixXd>& w_grad);

}  // namespace mvb
