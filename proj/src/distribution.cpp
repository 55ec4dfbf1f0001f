#include "mvb/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mvb/errors.hpp"
#include "mvb/rng.hpp"
#include "mvb/util.hpp"

namespace mvb {

namespace {

constexpr double kSumTolerance = 1e-8;
constexpr double kNormalizerTolerance = 1e-10;

void check_table_size(int p) {
  if (p < 1) throw std::invalid_argument("node count p must be positive");
  if (p > SubsetIndex::kMaxFullTable)
    throw CapacityError("full probability tables require p <= " +
                        std::to_string(SubsetIndex::kMaxFullTable));
}

// S-values S^T = sum_{nonempty U subseteq T} f^U via the subset zeta
// transform, f given in configuration-mask layout with f[0] ignored.
Eigen::VectorXd zeta_transform(Eigen::VectorXd values, int p) {
  values[0] = 0.0;
  for (int i = 0; i < p; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < static_cast<std::size_t>(values.size()); ++mask)
      if (mask & bit) values[mask] += values[mask ^ bit];
  }
  return values;
}

double log_sum_exp(const Eigen::VectorXd& v) {
  const double m = v.maxCoeff();
  return m + std::log((v.array() - m).exp().sum());
}

// log normalizer b(f) from the non-constant coefficients (mask layout).
double log_normalizer(const Eigen::VectorXd& coeffs_by_mask, int p) {
  return log_sum_exp(zeta_transform(coeffs_by_mask, p));
}

Eigen::VectorXd to_mask_layout(const SubsetIndex& index, const Eigen::VectorXd& graded) {
  Eigen::VectorXd out(graded.size());
  for (std::size_t pos = 0; pos < index.size(); ++pos)
    out[static_cast<Eigen::Index>(index.subset_at(pos))] = graded[static_cast<Eigen::Index>(pos)];
  return out;
}

}  // namespace

void validate_permutation(const std::vector<int>& order, int p) {
  if (static_cast<int>(order.size()) != p)
    throw std::invalid_argument("permutation length does not match p");
  std::vector<char> seen(p, 0);
  for (int v : order) {
    if (v < 0 || v >= p || seen[v])
      throw std::invalid_argument("not a permutation of {0,...,p-1}");
    seen[v] = 1;
  }
}

GeneralParams::GeneralParams(int p, Eigen::VectorXd probs) : p_(p), probs_(std::move(probs)) {
  check_table_size(p);
  if (probs_.size() != (Eigen::Index{1} << p))
    throw std::invalid_argument("GeneralParams: expected 2^p entries");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    if (!std::isfinite(probs_[i]) || probs_[i] < 0.0)
      throw std::invalid_argument("GeneralParams: entries must be finite and nonnegative");
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw std::invalid_argument("GeneralParams: entries must sum to 1 (got " +
                                std::to_string(sum) + ")");
  probs_ /= sum;
}

GeneralParams GeneralParams::uniform(int p) {
  check_table_size(p);
  const Eigen::Index n = Eigen::Index{1} << p;
  return GeneralParams(p, Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
}

NaturalParams::NaturalParams(int p, Eigen::VectorXd coeffs, Unchecked)
    : p_(p), index_(p), coeffs_(std::move(coeffs)) {}

NaturalParams::NaturalParams(int p, Eigen::VectorXd coeffs)
    : p_(p), index_(p), coeffs_(std::move(coeffs)) {
  check_table_size(p);
  if (coeffs_.size() != (Eigen::Index{1} << p))
    throw std::invalid_argument("NaturalParams: expected 2^p entries");
  if (!coeffs_.allFinite())
    throw std::domain_error("NaturalParams: coefficients must be finite");
  const double b = log_normalizer(to_mask_layout(index_, coeffs_), p_);
  if (std::abs(coeffs_[0] + b) > kNormalizerTolerance)
    throw std::invalid_argument("NaturalParams: f^empty must equal -b(f)");
}

NaturalParams NaturalParams::normalized(int p, Eigen::VectorXd coeffs) {
  check_table_size(p);
  if (coeffs.size() != (Eigen::Index{1} << p))
    throw std::invalid_argument("NaturalParams: expected 2^p entries");
  if (!coeffs.tail(coeffs.size() - 1).allFinite())
    throw std::domain_error("NaturalParams: coefficients must be finite");
  SubsetIndex index(p);
  coeffs[0] = 0.0;
  coeffs[0] = -log_normalizer(to_mask_layout(index, coeffs), p);
  return NaturalParams(p, std::move(coeffs), Unchecked{});
}

NaturalParams general_to_natural(const GeneralParams& gp) {
  if (!gp.strictly_positive())
    throw PositivityError("general_to_natural: probability table has a zero entry");
  const int p = gp.p();
  const std::size_t n = std::size_t{1} << p;
  // S^T = log(P(1_T) / P(0...0)), then Moebius inversion recovers f^T.
  Eigen::VectorXd f(n);
  const double log_p0 = std::log(gp.probs()[0]);
  for (std::size_t mask = 0; mask < n; ++mask)
    f[mask] = std::log(gp.probs()[static_cast<Eigen::Index>(mask)]) - log_p0;
  for (int i = 0; i < p; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < n; ++mask)
      if (mask & bit) f[mask] -= f[mask ^ bit];
  }
  SubsetIndex index(p);
  Eigen::VectorXd graded(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    graded[static_cast<Eigen::Index>(pos)] = f[index.subset_at(pos)];
  return NaturalParams::normalized(p, std::move(graded));
}

GeneralParams natural_to_general(const NaturalParams& np) {
  if (!np.coeffs().allFinite())
    throw std::domain_error("natural_to_general: coefficients must be finite");
  const int p = np.p();
  const Eigen::VectorXd s = zeta_transform(to_mask_layout(np.index(), np.coeffs()), p);
  const double b = log_sum_exp(s);
  return GeneralParams(p, (s.array() - b).exp());
}

GeneralParams marginalize(const GeneralParams& gp, Subset keep) {
  if (keep == 0) throw std::invalid_argument("marginalize: subset must be nonempty");
  if ((keep >> gp.p()) != 0)
    throw std::invalid_argument("marginalize: subset contains an element outside [p]");
  const int q = subset_size(keep);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(Eigen::Index{1} << q);
  const std::size_t n = std::size_t{1} << gp.p();
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::size_t compressed = 0;
    int bit_out = 0;
    for (Subset rest = keep; rest != 0; rest &= rest - 1, ++bit_out)
      if (mask & (std::size_t{1} << std::countr_zero(rest))) compressed |= std::size_t{1} << bit_out;
    out[static_cast<Eigen::Index>(compressed)] += gp.probs()[static_cast<Eigen::Index>(mask)];
  }
  return GeneralParams(q, std::move(out));
}

ConditionalCoeffs conditional_coeffs(const GeneralParams& gp, const std::vector<int>& order,
                                     int j) {
  const int p = gp.p();
  validate_permutation(order, p);
  if (j < 1 || j > p) throw std::invalid_argument("conditional_coeffs: j must be in 1..p");

  Subset keep = 0;
  for (int i = 0; i < j; ++i) keep |= Subset{1} << order[i];
  const GeneralParams marg = (j == p) ? gp : marginalize(gp, keep);
  const NaturalParams nat = general_to_natural(marg);

  // Rank of each original label among the kept (ascending) variables.
  std::vector<int> rank(p, -1);
  int r = 0;
  for (Subset rest = keep; rest != 0; rest &= rest - 1) rank[std::countr_zero(rest)] = r++;

  const Subset target_bit = Subset{1} << rank[order[j - 1]];
  SubsetIndex predecessors(j - 1);
  Eigen::VectorXd coeffs(Eigen::Index{1} << (j - 1));
  for (std::size_t pos = 0; pos < predecessors.size(); ++pos) {
    Subset marg_mask = target_bit;
    for (Subset rest = predecessors.subset_at(pos); rest != 0; rest &= rest - 1)
      marg_mask |= Subset{1} << rank[order[std::countr_zero(rest)]];
    coeffs[static_cast<Eigen::Index>(pos)] = nat.coeff(marg_mask);
  }
  return ConditionalCoeffs{order, j, std::move(coeffs)};
}

double conditional_logit(const ConditionalCoeffs& cc, Subset predecessor_support) {
  SubsetIndex predecessors(cc.j - 1);
  double z = 0.0;
  for (std::size_t pos = 0; pos < predecessors.size(); ++pos)
    if ((predecessors.subset_at(pos) & ~predecessor_support) == 0)
      z += cc.coeffs[static_cast<Eigen::Index>(pos)];
  return z;
}

GeneralParams sem_induced_distribution(const std::vector<ConditionalCoeffs>& coeffs,
                                       const std::vector<int>& order) {
  const int p = static_cast<int>(order.size());
  validate_permutation(order, p);
  check_table_size(p);
  if (static_cast<int>(coeffs.size()) != p)
    throw std::invalid_argument("sem_induced_distribution: need one ConditionalCoeffs per node");
  for (int i = 0; i < p; ++i)
    if (coeffs[i].coeffs.size() != (Eigen::Index{1} << i))
      throw std::invalid_argument("sem_induced_distribution: coefficient block " +
                                  std::to_string(i + 1) + " has wrong length");

  std::vector<SubsetIndex> indices;
  indices.reserve(p);
  for (int i = 0; i < p; ++i) indices.emplace_back(i);

  const std::size_t n = std::size_t{1} << p;
  Eigen::VectorXd probs(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    double prob = 1.0;
    for (int i = 0; i < p; ++i) {
      Subset support = 0;
      for (int t = 0; t < i; ++t)
        if (mask & (std::size_t{1} << order[t])) support |= Subset{1} << t;
      double z = 0.0;
      const SubsetIndex& idx = indices[i];
      for (std::size_t pos = 0; pos < idx.size(); ++pos)
        if ((idx.subset_at(pos) & ~support) == 0)
          z += coeffs[i].coeffs[static_cast<Eigen::Index>(pos)];
      const double q = sigmoid(z);
      prob *= (mask & (std::size_t{1} << order[i])) ? q : 1.0 - q;
    }
    probs[static_cast<Eigen::Index>(mask)] = prob;
  }
  return GeneralParams(p, std::move(probs));
}

BinaryDataset sample(const GeneralParams& gp, int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample: n must be nonnegative");
  const int p = gp.p();
  Eigen::MatrixXi rows(n, p);
  const std::size_t table = std::size_t{1} << p;
  std::vector<double> cumulative(table);
  double acc = 0.0;
  for (std::size_t c = 0; c < table; ++c) {
    acc += gp.probs()[static_cast<Eigen::Index>(c)];
    cumulative[c] = acc;
  }
  cumulative.back() = 1.0;
  SplitMix64 rng(seed);
  for (int i = 0; i < n; ++i) {
    const double u = rng.u01();
    const std::size_t c = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    for (int jj = 0; jj < p; ++jj) rows(i, jj) = (c >> jj) & 1;
  }
  return BinaryDataset(std::move(rows));
}

GeneralParams empirical_general_params(const BinaryDataset& data, double smoothing) {
  if (data.n() < 1) throw std::invalid_argument("empirical_general_params: need n >= 1");
  if (smoothing < 0.0)
    throw std::invalid_argument("empirical_general_params: smoothing must be nonnegative");
  const int p = data.p();
  check_table_size(p);
  const Eigen::Index table = Eigen::Index{1} << p;
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(table);
  for (int i = 0; i < data.n(); ++i) counts[static_cast<Eigen::Index>(data.row_support(i))] += 1.0;
  const double denom = static_cast<double>(data.n()) + smoothing * static_cast<double>(table);
  return GeneralParams(p, (counts.array() + smoothing) / denom);
}

}  // namespace mvb
