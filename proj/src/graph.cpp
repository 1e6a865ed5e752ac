// graph.cpp - dataset validation and slicing.
#include "topofc/graph.hpp"

#include <numeric>
#include <set>

namespace topofc {

int ValidationReport::total_self_loops() const {
  int n = 0;
  for (const auto& v : per_graph) n += v.self_loops_removed;
  return n;
}

int ValidationReport::total_duplicate_edges() const {
  int n = 0;
  for (const auto& v : per_graph) n += v.duplicate_edges_removed;
  return n;
}

int ValidationReport::total_asymmetric_edges() const {
  int n = 0;
  for (const auto& v : per_graph) n += v.asymmetric_edges;
  return n;
}

int ValidationReport::total_isolated_nodes() const {
  int n = 0;
  for (const auto& v : per_graph) n += v.isolated_nodes;
  return n;
}

bool ValidationReport::clean() const {
  for (const auto& v : per_graph)
    if (!v.clean()) return false;
  return true;
}

ValidationReport validate(const Dataset& ds) {
  ValidationReport report;
  report.per_graph.resize(ds.graphs.size());
  for (std::size_t gi = 0; gi < ds.graphs.size(); ++gi) {
    GraphViolations& v = report.per_graph[gi];
    v.graph_id = static_cast<int>(gi);
    if (gi < ds.parse_stats.size()) {
      v.self_loops_removed = ds.parse_stats[gi].self_loops_removed;
      v.duplicate_edges_removed = ds.parse_stats[gi].duplicate_edges_removed;
      v.asymmetric_edges = ds.parse_stats[gi].asymmetric_edges;
    }
    const Graph& g = ds.graphs[gi];
    std::vector<char> touched(g.num_nodes, 0);
    for (auto [a, b] : g.edges) touched[a] = touched[b] = 1;
    for (char t : touched)
      if (!t) v.isolated_nodes++;
  }
  return report;
}

Graph graph_slice(const Dataset& ds, std::size_t idx) {
  if (idx >= ds.graphs.size())
    throw IndexError("graph index " + std::to_string(idx) + " out of range [0, " +
                     std::to_string(ds.graphs.size()) + ")");
  return ds.graphs[idx];
}

std::vector<int> node_label_alphabet(const Dataset& ds) {
  std::set<int> distinct;
  for (const Graph& g : ds.graphs)
    if (g.node_labels)
      distinct.insert(g.node_labels->begin(), g.node_labels->end());
  return {distinct.begin(), distinct.end()};
}

}  // namespace topofc
