#pragma once

#include <Eigen/Dense>

#include "mvb/dag.hpp"

namespace mvb {

// Smooth acyclicity characterizations; both satisfy h(W) >= 0 with
// h(W) = 0 iff the nonzero pattern of W is a DAG.
enum class AcyclicityKind {
  ExpmTrace,  // h(W) = trace(exp(W o W)) - p
  LogDet,     // h(W) = p log(s) - log det(sI - W o W), valid for rho(W o W) < s
};

struct AcyclicityResult {
  double value;
  Eigen::MatrixXd grad;
};

AcyclicityResult acyclicity_value_and_grad(const Eigen::Ref<const Eigen::MatrixXd>& w,
                                           AcyclicityKind kind = AcyclicityKind::ExpmTrace,
                                           double logdet_s = 1.0);

inline AcyclicityResult acyclicity_value_and_grad(const WeightedAdjacency& w,
                                                  AcyclicityKind kind = AcyclicityKind::ExpmTrace,
                                                  double logdet_s = 1.0) {
  return acyclicity_value_and_grad(w.entries(), kind, logdet_s);
}

}  // namespace mvb
