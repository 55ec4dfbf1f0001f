#include "mvb/solver.hpp"

#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "mvb/errors.hpp"
#include "mvb/penalty.hpp"
#include "mvb/rng.hpp"
#include "mvb/score.hpp"

namespace mvb {

void SolverConfig::validate() const {
  if (!(lambda0 > 0.0) || !(delta0 > 0.0))
    throw std::invalid_argument("SolverConfig: lambda0 and delta0 must be positive");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("SolverConfig: gamma must be in (0, 1)");
  if (edge_threshold < 0.0 || prune_threshold < 0.0 || parent_tol < 0.0)
    throw std::invalid_argument("SolverConfig: thresholds must be nonnegative");
  if (mu_schedule.empty())
    throw std::invalid_argument("SolverConfig: mu schedule must be nonempty");
  if (max_inner_iterations < 1 || max_rounds < 1)
    throw std::invalid_argument("SolverConfig: iteration limits must be positive");
  if (stage2_ridge < 0.0)
    throw std::invalid_argument("SolverConfig: stage2_ridge must be nonnegative");
}

namespace {

// Objective pieces shared by both data and population inputs.
struct Problem {
  Eigen::MatrixXd design;       // n x m
  Eigen::MatrixXd labels;       // n x p
  Eigen::VectorXd row_weights;  // sums to one
  ParamMode mode;
  int p;
  AcyclicityKind acyclicity;

  double score_only(const Eigen::MatrixXd& h) const {
    return weighted_logistic_score(design, labels, row_weights, h, false).value;
  }

  double objective(const Eigen::MatrixXd& h, const PenaltyParams& pp, double mu) const {
    double value = score_only(h);
    const Eigen::MatrixXd w = induced_adjacency_values(mode, p, h);
    value += adjacency_penalty(w, pp).value;
    const double hv = acyclicity_value_and_grad(w, acyclicity).value;
    return value + 0.5 * mu * hv * hv;
  }

  double objective_with_grad(const Eigen::MatrixXd& h, const PenaltyParams& pp, double mu,
                             Eigen::MatrixXd& grad) const {
    ScoreResult sr = weighted_logistic_score(design, labels, row_weights, h, true);
    const Eigen::MatrixXd w = induced_adjacency_values(mode, p, h);
    const AdjacencyPenalty pen = adjacency_penalty(w, pp);
    const AcyclicityResult acy = acyclicity_value_and_grad(w, acyclicity);
    const Eigen::MatrixXd w_grad = pen.deriv + mu * acy.value * acy.grad;
    grad = sr.grad + chain_adjacency_grad(mode, p, h, w_grad);
    ParamMatrix::project_structural_zeros(mode, p, grad);
    return sr.value + pen.value + 0.5 * mu * acy.value * acy.value;
  }
};

double flat_dot(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a.array() * b.array()).sum();
}

// L-BFGS with Armijo backtracking over the free coefficients (structural
// zeros never move because their gradient entries are projected to zero).
void lbfgs_minimize(const Problem& prob, const PenaltyParams& pp, double mu,
                    Eigen::MatrixXd& h, int max_iterations, double grad_tolerance,
                    const std::vector<SolveTraceRow>& trace_so_far) {
  constexpr int kHistory = 10;
  std::deque<Eigen::MatrixXd> s_hist, y_hist;
  std::deque<double> rho_hist;

  Eigen::MatrixXd grad;
  double f = prob.objective_with_grad(h, pp, mu, grad);
  if (!std::isfinite(f))
    throw SolverFailure("solver diverged: non-finite objective at start", trace_so_far);

  for (int it = 0; it < max_iterations; ++it) {
    if (grad.norm() <= grad_tolerance) return;

    // Two-loop recursion.
    Eigen::MatrixXd q = grad;
    std::vector<double> alpha(s_hist.size());
    for (int k = static_cast<int>(s_hist.size()) - 1; k >= 0; --k) {
      alpha[k] = rho_hist[k] * flat_dot(s_hist[k], q);
      q -= alpha[k] * y_hist[k];
    }
    if (!s_hist.empty()) {
      const double gamma_scale = flat_dot(s_hist.back(), y_hist.back()) /
                                 flat_dot(y_hist.back(), y_hist.back());
      q *= gamma_scale;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * flat_dot(y_hist[k], q);
      q += (alpha[k] - beta) * s_hist[k];
    }
    Eigen::MatrixXd direction = -q;

    double slope = flat_dot(grad, direction);
    if (!(slope < 0.0)) {  // not a descent direction; restart from steepest
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      direction = -grad;
      slope = -grad.squaredNorm();
    }

    double t = s_hist.empty() ? std::min(1.0, 1.0 / std::max(1.0, grad.norm())) : 1.0;
    bool accepted = false;
    Eigen::MatrixXd h_new, grad_new;
    double f_new = f;
    for (int half = 0; half < 50; ++half) {
      h_new = h + t * direction;
      f_new = prob.objective(h_new, pp, mu);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (!s_hist.empty()) {  // retry once from a clean steepest-descent state
        s_hist.clear();
        y_hist.clear();
        rho_hist.clear();
        continue;
      }
      return;  // no further progress possible at this scale
    }

    f_new = prob.objective_with_grad(h_new, pp, mu, grad_new);
    if (!std::isfinite(f_new) || !grad_new.allFinite())
      throw SolverFailure("solver diverged: non-finite objective", trace_so_far);

    const Eigen::MatrixXd s = h_new - h;
    const Eigen::MatrixXd y = grad_new - grad;
    const double sy = flat_dot(s, y);
    if (sy > 1e-10 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > kHistory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    h = std::move(h_new);
    grad = std::move(grad_new);
    f = f_new;
  }
}

SolveResult solve_impl(Problem prob, const InteractionMap& map, const SolverConfig& cfg) {
  cfg.validate();
  if (map.kind() != InteractionKind::Full && map.kind() != InteractionKind::FirstOnly)
    throw std::invalid_argument("solve: map must be full or first-only");
  const ParamMode mode =
      map.kind() == InteractionKind::Full ? ParamMode::Full : ParamMode::FirstOrder;
  const int p = prob.p;
  if (mode == ParamMode::Full && p > 12)
    throw CapacityError("solve: full mode caps at p <= 12");
  if (mode == ParamMode::FirstOrder && p > 64)
    throw CapacityError("solve: first-order mode caps at p <= 64");
  prob.mode = mode;

  const int m = ParamMatrix::feature_count(mode, p);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, p);
  SplitMix64 rng(cfg.seed);
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < m; ++k) h(k, j) = cfg.init_noise_scale * rng.uniform(-1.0, 1.0);
  ParamMatrix::project_structural_zeros(mode, p, h);

  std::vector<SolveTraceRow> trace;
  Eigen::MatrixXd best_h = h;
  double best_score = std::numeric_limits<double>::infinity();

  for (int round = 0; round < cfg.max_rounds; ++round) {
    const double lambda = cfg.lambda0 * std::pow(cfg.gamma, round);
    const double delta = cfg.delta0 * std::pow(cfg.gamma, round);
    const PenaltyParams pp(lambda, delta);
    for (double mu : cfg.mu_schedule) {
      lbfgs_minimize(prob, pp, mu, h, cfg.max_inner_iterations, cfg.grad_tolerance, trace);
      const Eigen::MatrixXd w = induced_adjacency_values(mode, p, h);
      const int edges = static_cast<int>((w.array() > cfg.edge_threshold).count());
      trace.push_back(SolveTraceRow{round, lambda, delta, mu, prob.score_only(h),
                                    acyclicity_value_and_grad(w, cfg.acyclicity).value, edges});
    }
    const double round_score = prob.score_only(h);
    if (round_score < best_score - cfg.score_decrease_tol) {
      best_score = round_score;
      best_h = h;
    } else {
      break;  // unpenalized score stopped decreasing
    }
  }

  const Eigen::MatrixXd w = induced_adjacency_values(mode, p, best_h);
  SolveResult result{ParamMatrix(mode, p, best_h), WeightedAdjacency(w),
                     threshold_to_dag(w, cfg.edge_threshold), std::move(trace), best_score};
  return result;
}

}  // namespace

Dag threshold_to_dag(const Eigen::Ref<const Eigen::MatrixXd>& w, double tau) {
  const int p = static_cast<int>(w.rows());
  Eigen::MatrixXd kept = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && w(i, j) > tau) kept(i, j) = w(i, j);

  // Break any residual cycle by deleting its weakest edge.
  while (true) {
    std::vector<int> color(p, 0), stack, parent(p, -1);
    int cycle_from = -1, cycle_to = -1;
    std::function<void(int)> dfs = [&](int v) {
      color[v] = 1;
      for (int c = 0; c < p; ++c) {
        if (kept(v, c) == 0.0) continue;
        if (color[c] == 1 && cycle_from < 0) {
          cycle_from = v;
          cycle_to = c;
          return;
        }
        if (color[c] == 0) {
          parent[c] = v;
          dfs(c);
          if (cycle_from >= 0) return;
        }
      }
      color[v] = 2;
    };
    for (int v = 0; v < p && cycle_from < 0; ++v)
      if (color[v] == 0) dfs(v);
    if (cycle_from < 0) break;

    // Walk the cycle cycle_to -> ... -> cycle_from -> cycle_to.
    int weakest_from = cycle_from, weakest_to = cycle_to;
    double weakest = kept(cycle_from, cycle_to);
    for (int v = cycle_from; v != cycle_to; v = parent[v]) {
      const int u = parent[v];
      if (kept(u, v) < weakest) {
        weakest = kept(u, v);
        weakest_from = u;
        weakest_to = v;
      }
    }
    kept(weakest_from, weakest_to) = 0.0;
  }

  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (kept(i, j) != 0.0) edges.emplace_back(i, j);
  return Dag(p, std::move(edges));
}

SolveResult solve(const BinaryDataset& data, const InteractionMap& map,
                  const SolverConfig& cfg) {
  if (data.n() < 1) throw std::invalid_argument("solve: empty dataset");
  if (data.p() != map.p()) throw std::invalid_argument("solve: dimension mismatch");
  Problem prob;
  prob.design = map.design_matrix(data.rows());
  prob.labels = data.rows().cast<double>();
  prob.row_weights =
      Eigen::VectorXd::Constant(data.n(), 1.0 / static_cast<double>(data.n()));
  prob.mode = ParamMode::FirstOrder;  // set properly in solve_impl
  prob.p = data.p();
  prob.acyclicity = cfg.acyclicity;
  return solve_impl(std::move(prob), map, cfg);
}

SolveResult solve(const GeneralParams& gp, const InteractionMap& map, const SolverConfig& cfg) {
  if (gp.p() != map.p()) throw std::invalid_argument("solve: dimension mismatch");
  Problem prob;
  const Eigen::MatrixXi rows = configuration_rows(gp.p());
  prob.design = map.design_matrix(rows);
  prob.labels = rows.cast<double>();
  prob.row_weights = gp.probs();
  prob.mode = ParamMode::FirstOrder;
  prob.p = gp.p();
  prob.acyclicity = cfg.acyclicity;
  return solve_impl(std::move(prob), map, cfg);
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

SolverConfig load_solver_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  SolverConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "lambda0") cfg.lambda0 = std::stod(value);
      else if (key == "delta0") cfg.delta0 = std::stod(value);
      else if (key == "gamma") cfg.gamma = std::stod(value);
      else if (key == "edge_threshold") cfg.edge_threshold = std::stod(value);
      else if (key == "prune_threshold") cfg.prune_threshold = std::stod(value);
      else if (key == "parent_tol") cfg.parent_tol = std::stod(value);
      else if (key == "max_inner_iterations") cfg.max_inner_iterations = std::stoi(value);
      else if (key == "grad_tolerance") cfg.grad_tolerance = std::stod(value);
      else if (key == "max_rounds") cfg.max_rounds = std::stoi(value);
      else if (key == "score_decrease_tol") cfg.score_decrease_tol = std::stod(value);
      else if (key == "stage2_ridge") cfg.stage2_ridge = std::stod(value);
      else if (key == "init_noise_scale") cfg.init_noise_scale = std::stod(value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "acyclicity") {
        if (value == "expm") cfg.acyclicity = AcyclicityKind::ExpmTrace;
        else if (value == "logdet") cfg.acyclicity = AcyclicityKind::LogDet;
        else throw std::runtime_error("expected expm or logdet");
      } else if (key == "mu_schedule") {
        cfg.mu_schedule.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.mu_schedule.push_back(std::stod(trim(item)));
      } else {
        throw std::runtime_error("unknown key '" + key + "'");
      }
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad value for '" +
                               key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

void write_solver_config(const std::string& path, const SolverConfig& cfg) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file: " + path);
  out << "lambda0 = " << cfg.lambda0 << "\n";
  out << "delta0 = " << cfg.delta0 << "\n";
  out << "gamma = " << cfg.gamma << "\n";
  out << "edge_threshold = " << cfg.edge_threshold << "\n";
  out << "prune_threshold = " << cfg.prune_threshold << "\n";
  out << "parent_tol = " << cfg.parent_tol << "\n";
  out << "mu_schedule = ";
  for (std::size_t i = 0; i < cfg.mu_schedule.size(); ++i)
    out << (i ? "," : "") << cfg.mu_schedule[i];
  out << "\n";
  out << "max_inner_iterations = " << cfg.max_inner_iterations << "\n";
  out << "grad_tolerance = " << cfg.grad_tolerance << "\n";
  out << "max_rounds = " << cfg.max_rounds << "\n";
  out << "score_decrease_tol = " << cfg.score_decrease_tol << "\n";
  out << "stage2_ridge = " << cfg.stage2_ridge << "\n";
  out << "acyclicity = " << (cfg.acyclicity == AcyclicityKind::ExpmTrace ? "expm" : "logdet")
      << "\n";
  out << "init_noise_scale = " << cfg.init_noise_scale << "\n";
  out << "seed = " << cfg.seed << "\n";
}

}  // namespace mvb
