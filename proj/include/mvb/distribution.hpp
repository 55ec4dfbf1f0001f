#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mvb/dataset.hpp"
#include "mvb/subset_index.hpp"

namespace mvb {

// Probability mass over all 2^p binary configurations. Entry c holds
// P(X = x) for the configuration with index c = sum_j x_j 2^(j-1), i.e.
// variable j occupies bit j-1 (0-based: variable i occupies bit i).
class GeneralParams {
 public:
  GeneralParams(int p, Eigen::VectorXd probs);
  static GeneralParams uniform(int p);

  int p() const { return p_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  double prob(Subset config) const { return probs_[static_cast<Eigen::Index>(config)]; }
  bool strictly_positive() const { return probs_.minCoeff() > 0.0; }

 private:
  int p_;
  Eigen::VectorXd probs_;
};

// Exponential-family coefficients f^S in graded-lexicographic order. The
// leading entry f^empty acts as the normalizer: it equals -b(f) computed
// from the remaining coefficients, so the induced mass sums to one.
class NaturalParams {
 public:
  // Validates the normalizer to 1e-10; throws std::invalid_argument if off.
  NaturalParams(int p, Eigen::VectorXd coeffs);
  // Overwrites entry 0 with -b(f) computed from the rest.
  static NaturalParams normalized(int p, Eigen::VectorXd coeffs);

  int p() const { return p_; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  const SubsetIndex& index() const { return index_; }
  double coeff(Subset s) const {
    return coeffs_[static_cast<Eigen::Index>(index_.position_of(s))];
  }

 private:
  struct Unchecked {};
  NaturalParams(int p, Eigen::VectorXd coeffs, Unchecked);

  int p_;
  SubsetIndex index_;
  Eigen::VectorXd coeffs_;
};

// Coefficients of the Bernoulli conditional for the node at (1-based)
// position j of `order`, aligned with the feature map over its
// predecessors (X_order[0], ..., X_order[j-2]) in graded-lex order.
struct ConditionalCoeffs {
  std::vector<int> order;  // permutation of {0,...,p-1}
  int j = 0;               // 1-based position in `order`
  Eigen::VectorXd coeffs;  // length 2^(j-1)
};

NaturalParams general_to_natural(const GeneralParams& gp);
GeneralParams natural_to_general(const NaturalParams& np);

// Marginal law of the variables in `keep` (nonempty), renumbered in
// ascending order of their original indices.
GeneralParams marginalize(const GeneralParams& gp, Subset keep);

ConditionalCoeffs conditional_coeffs(const GeneralParams& gp,
                                     const std::vector<int>& order, int j);

// Exact joint induced by the structural equations: sampling each node in
// `order` from a Bernoulli with logit coeffs . features(predecessors).
GeneralParams sem_induced_distribution(const std::vector<ConditionalCoeffs>& coeffs,
                                       const std::vector<int>& order);

// n i.i.d. draws by inverse CDF over the configuration table.
BinaryDataset sample(const GeneralParams& gp, int n, std::uint64_t seed);

// Empirical configuration frequencies with additive smoothing:
// probs[c] = (count(c) + smoothing) / (n + smoothing * 2^p).
GeneralParams empirical_general_params(const BinaryDataset& data, double smoothing = 0.5);

// Internal helper shared with the recovery code: logit of
// P(node at position j = 1 | predecessors) evaluated at one configuration.
double conditional_logit(const ConditionalCoeffs& cc, Subset predecessor_support);

void validate_permutation(const std::vector<int>& order, int p);

}  // namespace mvb
