#include "mvb/recovery.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "mvb/errors.hpp"

namespace mvb {

std::pair<std::vector<int>, ConditionalCoeffs> recover_parents(const GeneralParams& gp,
                                                               const std::vector<int>& order,
                                                               int j, double tol) {
  ConditionalCoeffs cc = conditional_coeffs(gp, order, j);
  SubsetIndex predecessors(j - 1);
  std::vector<double> strength(j - 1, 0.0);
  for (std::size_t pos = 0; pos < predecessors.size(); ++pos) {
    const double c = cc.coeffs[static_cast<Eigen::Index>(pos)];
    if (c == 0.0) continue;
    for (Subset rest = predecessors.subset_at(pos); rest != 0; rest &= rest - 1)
      strength[std::countr_zero(rest)] += c * c;
  }
  std::vector<int> parents;
  for (int i = 0; i < j - 1; ++i)
    if (strength[i] > tol) parents.push_back(order[i]);
  std::sort(parents.begin(), parents.end());
  return {std::move(parents), std::move(cc)};
}

RecoveredModel recover_dag(const GeneralParams& gp, const std::vector<int>& order, double tol) {
  const int p = gp.p();
  validate_permutation(order, p);
  std::vector<Edge> edges;
  std::vector<ConditionalCoeffs> coeffs;
  coeffs.reserve(p);
  for (int j = 1; j <= p; ++j) {
    auto [parents, cc] = recover_parents(gp, order, j, tol);
    for (int parent : parents) edges.emplace_back(parent, order[j - 1]);
    coeffs.push_back(std::move(cc));
  }
  return RecoveredModel{order, Dag(p, std::move(edges)), std::move(coeffs)};
}

std::vector<RecoveredModel> enumerate_equivalence_class(const GeneralParams& gp, double tol) {
  const int p = gp.p();
  if (p > kEnumerationCap)
    throw CapacityError("enumerate_equivalence_class: p <= " +
                        std::to_string(kEnumerationCap) + " required, got " + std::to_string(p));
  std::vector<std::vector<int>> orders;
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    orders.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<RecoveredModel> models(orders.size(), RecoveredModel{{}, Dag::empty(p), {}});
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(orders.size()));
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < orders.size(); i += workers)
          models[i] = recover_dag(gp, orders[i], tol);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
  return models;
}

std::vector<RecoveredModel> minimal_equivalence_class(const std::vector<RecoveredModel>& models) {
  if (models.empty())
    throw std::invalid_argument("minimal_equivalence_class: empty input");
  int best = models.front().graph.edge_count();
  for (const auto& m : models) best = std::min(best, m.graph.edge_count());
  std::vector<RecoveredModel> out;
  for (const auto& m : models)
    if (m.graph.edge_count() == best) out.push_back(m);
  return out;
}

}  // namespace mvb
