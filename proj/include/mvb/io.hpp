#pragma once

#include <string>
#include <vector>

#include "mvb/cpdag.hpp"
#include "mvb/dag.hpp"
#include "mvb/dataset.hpp"
#include "mvb/datagen.hpp"
#include "mvb/distribution.hpp"
#include "mvb/recovery.hpp"
#include "mvb/solver.hpp"

namespace mvb {

// All writers are atomic: contents land in a temporary file that is renamed
// into place. Readers report malformed input as "path:line: message".

// Headerless CSV of 0/1 integers, one sample per row.
void write_dataset_csv(const std::string& path, const BinaryDataset& data);
BinaryDataset read_dataset_csv(const std::string& path);

// One-line header "p,<p>", then the 2^p probabilities in
// configuration-index order, one per line.
void write_general_params_csv(const std::string& path, const GeneralParams& gp);
GeneralParams read_general_params_csv(const std::string& path);

// Edge list, one "i j" pair per line, 1-based; a "# p <p>" comment header
// records the node count (inferred from the maximum index when absent).
void write_edge_list(const std::string& path, const Dag& g);
Dag read_edge_list(const std::string& path);

// Same layout with a third column flag: d for directed, u for undirected.
void write_cpdag(const std::string& path, const Cpdag& c);
Cpdag read_cpdag(const std::string& path);

void write_adjacency_csv(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_adjacency_csv(const std::string& path);

void write_trace_csv(const std::string& path, const std::vector<SolveTraceRow>& trace);

// Ground-truth weight vectors: node, subset of parent labels, weight.
void write_weight_manifest_csv(const std::string& path, const GroundTruth& gt);

// Equivalence class: graph_<rank>.txt edge lists plus manifest.csv rows
// (rank, permutation, edge count, minimal flag).
void write_equivalence_class(const std::string& directory,
                             const std::vector<RecoveredModel>& models,
                             const std::vector<std::size_t>& minimal_ranks);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace mvb
