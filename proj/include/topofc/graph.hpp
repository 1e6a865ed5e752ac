// graph.hpp - graph-classification dataset model (graphstore module).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topofc/errors.hpp"
#include "topofc/matrix.hpp"

namespace topofc {

// One undirected structural graph. Node ids are 0-based and contiguous.
// Edges are stored once per unordered pair with first < second; self-loops
// and duplicates never survive construction.
struct Graph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<int>> node_labels;
  std::optional<Matrix> node_attributes;

  std::size_t num_edges() const noexcept { return edges.size(); }
};

// Validates the Graph invariants; throws on violation.
void check_graph(const Graph& g);

// Per-graph counters filled while parsing. Kept separate from Graph so the
// clean in-memory model stays free of file-format noise.
struct GraphParseStats {
  int self_loops_removed = 0;
  int duplicate_edges_removed = 0;
  int asymmetric_edges = 0;  // undirected edges seen in one direction only
};

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> labels;          // remapped to 0..C-1
  std::vector<int> label_alphabet;  // sorted distinct raw labels
  std::vector<GraphParseStats> parse_stats;  // parallel to graphs

  std::size_t size() const noexcept { return graphs.size(); }
  int num_classes() const noexcept { return static_cast<int>(label_alphabet.size()); }
};

struct GraphViolations {
  int graph_id = 0;
  int self_loops_removed = 0;
  int duplicate_edges_removed = 0;
  int asymmetric_edges = 0;
  int isolated_nodes = 0;

  bool clean() const noexcept {
    return self_loops_removed == 0 && duplicate_edges_removed == 0 &&
           asymmetric_edges == 0 && isolated_nodes == 0;
  }
};

struct ValidationReport {
  std::vector<GraphViolations> per_graph;

  int total_self_loops() const;
  int total_duplicate_edges() const;
  int total_asymmetric_edges() const;
  int total_isolated_nodes() const;
  bool clean() const;
};

// Scans a parsed dataset for per-graph violations; never mutates ds.
ValidationReport validate(const Dataset& ds);

// Returns the idx-th graph by value; IndexError when out of range.
Graph graph_slice(const Dataset& ds, std::size_t idx);

// Sorted distinct node labels across the dataset (empty when no graph has
// node labels). Used to build dataset-wide one-hot encodings.
std::vector<int> node_label_alphabet(const Dataset& ds);

}  // namespace topofc
