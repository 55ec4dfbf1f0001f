#include "mvb/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mvb {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void parse_error(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

void write_text_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
  }
  std::filesystem::rename(tmp, path);
}

void write_dataset_csv(const std::string& path, const BinaryDataset& data) {
  std::string out;
  out.reserve(static_cast<std::size_t>(data.n()) * (2 * data.p() + 1));
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.p(); ++j) {
      if (j) out += ',';
      out += data.rows()(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  write_text_file(path, out);
}

BinaryDataset read_dataset_csv(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::vector<std::vector<int>> rows;
  std::string line;
  int lineno = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (width == 0) width = cells.size();
    if (cells.size() != width) parse_error(path, lineno, "inconsistent column count");
    std::vector<int> row;
    row.reserve(width);
    for (const auto& cell : cells) {
      if (cell == "0")
        row.push_back(0);
      else if (cell == "1")
        row.push_back(1);
      else
        parse_error(path, lineno, "expected 0 or 1, got '" + cell + "'");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": empty dataset");
  Eigen::MatrixXi m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return BinaryDataset(std::move(m));
}

void write_general_params_csv(const std::string& path, const GeneralParams& gp) {
  std::string out = "p," + std::to_string(gp.p()) + "\n";
  for (Eigen::Index c = 0; c < gp.probs().size(); ++c)
    out += format_double(gp.probs()[c]) + "\n";
  write_text_file(path, out);
}

GeneralParams read_general_params_csv(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) parse_error(path, 1, "missing header");
  const auto header = split(line, ',');
  if (header.size() != 2 || header[0] != "p") parse_error(path, 1, "expected header 'p,<p>'");
  int p = 0;
  try {
    p = std::stoi(header[1]);
  } catch (const std::exception&) {
    parse_error(path, 1, "bad node count '" + header[1] + "'");
  }
  std::vector<double> probs;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      probs.push_back(std::stod(line));
    } catch (const std::exception&) {
      parse_error(path, lineno, "bad probability '" + line + "'");
    }
  }
  if (p < 1 || probs.size() != (std::size_t{1} << p))
    throw std::runtime_error(path + ": expected 2^p probabilities");
  Eigen::VectorXd v(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) v[static_cast<Eigen::Index>(i)] = probs[i];
  return GeneralParams(p, std::move(v));
}

void write_edge_list(const std::string& path, const Dag& g) {
  std::string out = "# p " + std::to_string(g.p()) + "\n";
  for (const auto& [from, to] : g.edges())
    out += std::to_string(from + 1) + " " + std::to_string(to + 1) + "\n";
  write_text_file(path, out);
}

namespace {

struct EdgeLines {
  int p = 0;
  std::vector<std::pair<Edge, char>> edges;  // flag: 'd', 'u', or 0 (absent)
};

EdgeLines read_edge_lines(const std::string& path, bool allow_flag) {
  std::ifstream in = open_for_read(path);
  EdgeLines out;
  std::string line;
  int lineno = 0;
  int max_node = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::stringstream ss(line);
      std::string hash, key;
      int value = 0;
      if (ss >> hash >> key >> value && key == "p") out.p = value;
      continue;
    }
    std::stringstream ss(line);
    int i = 0, j = 0;
    if (!(ss >> i >> j)) parse_error(path, lineno, "expected 'i j' edge");
    std::string flag;
    char f = 0;
    if (ss >> flag) {
      if (!allow_flag || (flag != "d" && flag != "u"))
        parse_error(path, lineno, "unexpected trailing field '" + flag + "'");
      f = flag[0];
    }
    if (i < 1 || j < 1) parse_error(path, lineno, "node ids are 1-based");
    max_node = std::max({max_node, i, j});
    out.edges.push_back({{i - 1, j - 1}, f});
  }
  if (out.p == 0) out.p = max_node;
  if (out.p < max_node) throw std::runtime_error(path + ": header p smaller than max node id");
  return out;
}

}  // namespace

Dag read_edge_list(const std::string& path) {
  const EdgeLines lines = read_edge_lines(path, false);
  std::vector<Edge> edges;
  edges.reserve(lines.edges.size());
  for (const auto& [e, flag] : lines.edges) edges.push_back(e);
  return Dag(lines.p, std::move(edges));
}

void write_cpdag(const std::string& path, const Cpdag& c) {
  std::string out = "# p " + std::to_string(c.p()) + "\n";
  for (const auto& [from, to] : c.directed())
    out += std::to_string(from + 1) + " " + std::to_string(to + 1) + " d\n";
  for (const auto& [a, b] : c.undirected())
    out += std::to_string(a + 1) + " " + std::to_string(b + 1) + " u\n";
  write_text_file(path, out);
}

Cpdag read_cpdag(const std::string& path) {
  const EdgeLines lines = read_edge_lines(path, true);
  std::set<Edge> directed, undirected;
  for (const auto& [e, flag] : lines.edges) {
    if (flag == 'u')
      undirected.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
    else
      directed.insert(e);
  }
  return Cpdag(lines.p, std::move(directed), std::move(undirected));
}

void write_adjacency_csv(const std::string& path, const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  write_text_file(path, out);
}

Eigen::MatrixXd read_adjacency_csv(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        parse_error(path, lineno, "bad number '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      parse_error(path, lineno, "inconsistent column count");
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

void write_trace_csv(const std::string& path, const std::vector<SolveTraceRow>& trace) {
  std::string out = "# mvb-csv v1 solver-trace\n";
  out += "round,lambda,delta,mu,score,h_value,edge_count\n";
  for (const auto& row : trace) {
    out += std::to_string(row.round) + "," + format_double(row.lambda) + "," +
           format_double(row.delta) + "," + format_double(row.mu) + "," +
           format_double(row.score) + "," + format_double(row.h_value) + "," +
           std::to_string(row.edge_count) + "\n";
  }
  write_text_file(path, out);
}

void write_weight_manifest_csv(const std::string& path, const GroundTruth& gt) {
  std::string out = "# mvb-csv v1 weight-manifest\n";
  out += "node,subset,weight\n";
  for (int v = 0; v < gt.graph.p(); ++v) {
    const std::vector<int> parents = gt.graph.parents(v);
    const InteractionMap map(gt.tau, static_cast<int>(parents.size()));
    for (int k = 0; k < map.feature_count(); ++k) {
      std::string subset = "const";
      Subset s = map.active_subsets()[k];
      if (s != 0) {
        subset.clear();
        for (Subset rest = s; rest != 0; rest &= rest - 1) {
          if (!subset.empty()) subset += '|';
          subset += std::to_string(parents[std::countr_zero(rest)] + 1);
        }
      }
      out += std::to_string(v + 1) + "," + subset + "," +
             format_double(gt.node_weights[v][k]) + "\n";
    }
  }
  write_text_file(path, out);
}

void write_equivalence_class(const std::string& directory,
                             const std::vector<RecoveredModel>& models,
                             const std::vector<std::size_t>& minimal_ranks) {
  std::filesystem::create_directories(directory);
  std::set<std::size_t> minimal(minimal_ranks.begin(), minimal_ranks.end());
  std::string manifest = "# mvb-csv v1 equivalence-manifest\n";
  manifest += "rank,permutation,edge_count,minimal\n";
  for (std::size_t rank = 0; rank < models.size(); ++rank) {
    const auto& model = models[rank];
    std::string perm;
    for (std::size_t i = 0; i < model.order.size(); ++i) {
      if (i) perm += '|';
      perm += std::to_string(model.order[i] + 1);
    }
    manifest += std::to_string(rank) + "," + perm + "," +
                std::to_string(model.graph.edge_count()) + "," +
                (minimal.count(rank) ? "1" : "0") + "\n";
    write_edge_list(directory + "/graph_" + std::to_string(rank) + ".txt", model.graph);
  }
  write_text_file(directory + "/manifest.csv", manifest);
}

}  // namespace mvb
