// tudataset.cpp - TUDataset format parsing/serialization and dataset checks.
#include "topofc/tudataset.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace topofc {
namespace {

// Reads a whole file as lines, stripping CR. Trailing blank lines are
// dropped; interior blank lines are reported via ParseError.
std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FormatError("missing or unreadable file: " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
    lines.pop_back();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos)
      throw ParseError(file.filename().string(), i + 1, "blank line inside file body");
  }
  return lines;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(',', start);
    out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

long parse_int(const std::string& token, const std::string& file, std::size_t line) {
  std::string t = trim(token);
  if (t.empty()) throw ParseError(file, line, "empty token");
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(t.c_str(), &end, 10);
  if (errno != 0 || end != t.c_str() + t.size())
    throw ParseError(file, line, "non-numeric token '" + t + "'");
  return v;
}

double parse_real(const std::string& token, const std::string& file, std::size_t line) {
  std::string t = trim(token);
  if (t.empty()) throw ParseError(file, line, "empty token");
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (errno != 0 || end != t.c_str() + t.size())
    throw ParseError(file, line, "non-numeric token '" + t + "'");
  if (!std::isfinite(v))
    throw ParseError(file, line, "non-finite value '" + t + "'");
  return v;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void check_graph(const Graph& g) {
  if (g.num_nodes <= 0) throw FormatError("graph has non-positive node count");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 0 || a >= g.num_nodes || b < 0 || b >= g.num_nodes)
      throw IndexError("edge endpoint out of range");
    if (a == b) throw FormatError("self-loop stored in graph");
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) throw FormatError("duplicate undirected edge stored");
  }
  if (g.node_labels && g.node_labels->size() != static_cast<std::size_t>(g.num_nodes))
    throw DimensionError("node label count does not match node count");
  if (g.node_attributes) {
    if (g.node_attributes->rows() != static_cast<std::size_t>(g.num_nodes))
      throw DimensionError("attribute row count does not match node count");
    for (double v : g.node_attributes->data())
      if (!std::isfinite(v)) throw NumericError("non-finite node attribute");
  }
}

Dataset parse_tudataset(const std::filesystem::path& root_dir, const std::string& name) {
  auto file = [&](const std::string& suffix) { return root_dir / (name + suffix); };

  for (const char* suffix : {"_A.txt", "_graph_indicator.txt", "_graph_labels.txt"}) {
    if (!std::filesystem::exists(file(suffix)))
      throw FormatError("missing mandatory file: " + file(suffix).string());
  }

  // graph_indicator: 1-based graph id per node, defines node->graph mapping
  const std::string ind_name = name + "_graph_indicator.txt";
  auto ind_lines = read_lines(file("_graph_indicator.txt"));
  const std::size_t total_nodes = ind_lines.size();
  if (total_nodes == 0) throw FormatError(ind_name + " is empty");

  std::vector<int> node_graph(total_nodes);   // 0-based graph id per global node
  std::vector<int> node_local(total_nodes);   // local id within its graph
  int num_graphs = 0;
  for (std::size_t i = 0; i < total_nodes; ++i) {
    long g = parse_int(ind_lines[i], ind_name, i + 1);
    if (g < 1) throw ParseError(ind_name, i + 1, "graph id must be >= 1");
    num_graphs = std::max(num_graphs, static_cast<int>(g));
    node_graph[i] = static_cast<int>(g) - 1;
  }
  std::vector<int> graph_sizes(num_graphs, 0);
  for (std::size_t i = 0; i < total_nodes; ++i)
    node_local[i] = graph_sizes[node_graph[i]]++;
  for (int g = 0; g < num_graphs; ++g)
    if (graph_sizes[g] == 0)
      throw FormatError(ind_name + ": graph ids are not contiguous (graph " +
                        std::to_string(g + 1) + " has no nodes)");

  // graph_labels
  const std::string lab_name = name + "_graph_labels.txt";
  auto lab_lines = read_lines(file("_graph_labels.txt"));
  if (lab_lines.size() != static_cast<std::size_t>(num_graphs))
    throw FormatError(lab_name + ": expected " + std::to_string(num_graphs) +
                      " labels, found " + std::to_string(lab_lines.size()));
  std::vector<int> raw_labels(num_graphs);
  for (int g = 0; g < num_graphs; ++g)
    raw_labels[g] = static_cast<int>(parse_int(lab_lines[g], lab_name, g + 1));

  // edges: directed lines, each undirected edge normally appears twice
  const std::string a_name = name + "_A.txt";
  auto edge_lines = read_lines(file("_A.txt"));
  // per graph: unordered pair -> (forward count, reverse count)
  std::vector<std::map<std::pair<int, int>, std::pair<int, int>>> pair_counts(num_graphs);
  std::vector<GraphParseStats> stats(num_graphs);
  for (std::size_t li = 0; li < edge_lines.size(); ++li) {
    auto fields = split_commas(edge_lines[li]);
    if (fields.size() != 2)
      throw ParseError(a_name, li + 1, "expected 'i, j', found '" + edge_lines[li] + "'");
    long u = parse_int(fields[0], a_name, li + 1);
    long v = parse_int(fields[1], a_name, li + 1);
    if (u < 1 || v < 1 || u > static_cast<long>(total_nodes) ||
        v > static_cast<long>(total_nodes))
      throw ParseError(a_name, li + 1, "node id out of range");
    int gu = node_graph[u - 1], gv = node_graph[v - 1];
    if (gu != gv)
      throw CrossGraphEdgeError(a_name + ":" + std::to_string(li + 1) + ": edge " +
                                std::to_string(u) + "-" + std::to_string(v) +
                                " joins graphs " + std::to_string(gu + 1) + " and " +
                                std::to_string(gv + 1));
    int a = node_local[u - 1], b = node_local[v - 1];
    if (a == b) {
      stats[gu].self_loops_removed++;
      continue;
    }
    bool forward = a < b;
    auto key = std::minmax(a, b);
    auto& counts = pair_counts[gu][key];
    (forward ? counts.first : counts.second)++;
  }

  Dataset ds;
  ds.name = name;
  ds.graphs.resize(num_graphs);
  ds.parse_stats = std::move(stats);
  for (int g = 0; g < num_graphs; ++g) {
    Graph& graph = ds.graphs[g];
    graph.num_nodes = graph_sizes[g];
    for (const auto& [key, counts] : pair_counts[g]) {
      graph.edges.push_back(key);
      auto [fwd, rev] = counts;
      if (fwd == 0 || rev == 0) ds.parse_stats[g].asymmetric_edges++;
      if (fwd > 1) ds.parse_stats[g].duplicate_edges_removed += fwd - 1;
      if (rev > 1) ds.parse_stats[g].duplicate_edges_removed += rev - 1;
    }
  }

  // optional node labels
  if (std::filesystem::exists(file("_node_labels.txt"))) {
    const std::string nl_name = name + "_node_labels.txt";
    auto nl_lines = read_lines(file("_node_labels.txt"));
    if (nl_lines.size() != total_nodes)
      throw FormatError(nl_name + ": expected " + std::to_string(total_nodes) +
                        " lines, found " + std::to_string(nl_lines.size()));
    for (int g = 0; g < num_graphs; ++g)
      ds.graphs[g].node_labels.emplace(graph_sizes[g]);
    for (std::size_t i = 0; i < total_nodes; ++i) {
      int v = static_cast<int>(parse_int(nl_lines[i], nl_name, i + 1));
      (*ds.graphs[node_graph[i]].node_labels)[node_local[i]] = v;
    }
  }

  // optional node attributes
  if (std::filesystem::exists(file("_node_attributes.txt"))) {
    const std::string na_name = name + "_node_attributes.txt";
    auto na_lines = read_lines(file("_node_attributes.txt"));
    if (na_lines.size() != total_nodes)
      throw FormatError(na_name + ": expected " + std::to_string(total_nodes) +
                        " lines, found " + std::to_string(na_lines.size()));
    std::size_t d_attr = split_commas(na_lines[0]).size();
    for (int g = 0; g < num_graphs; ++g)
      ds.graphs[g].node_attributes.emplace(graph_sizes[g], d_attr);
    for (std::size_t i = 0; i < total_nodes; ++i) {
      auto fields = split_commas(na_lines[i]);
      if (fields.size() != d_attr)
        throw ParseError(na_name, i + 1,
                         "expected " + std::to_string(d_attr) + " attributes, found " +
                             std::to_string(fields.size()));
      for (std::size_t c = 0; c < d_attr; ++c)
        (*ds.graphs[node_graph[i]].node_attributes)(node_local[i], c) =
            parse_real(fields[c], na_name, i + 1);
    }
  }

  // remap labels to 0..C-1, preserving raw sort order
  std::set<int> distinct(raw_labels.begin(), raw_labels.end());
  ds.label_alphabet.assign(distinct.begin(), distinct.end());
  ds.labels.resize(num_graphs);
  for (int g = 0; g < num_graphs; ++g) {
    auto it = std::lower_bound(ds.label_alphabet.begin(), ds.label_alphabet.end(),
                               raw_labels[g]);
    ds.labels[g] = static_cast<int>(it - ds.label_alphabet.begin());
  }

  for (const Graph& g : ds.graphs) check_graph(g);
  return ds;
}

namespace {

struct SerializedFiles {
  std::string a, indicator, labels;
  std::optional<std::string> node_labels, node_attributes;
};

SerializedFiles serialize(const Dataset& ds) {
  SerializedFiles out;
  std::ostringstream a, ind, lab, nl, na;
  bool all_node_labels = !ds.graphs.empty();
  bool all_node_attrs = !ds.graphs.empty();
  for (const Graph& g : ds.graphs) {
    all_node_labels = all_node_labels && g.node_labels.has_value();
    all_node_attrs = all_node_attrs && g.node_attributes.has_value();
  }

  long offset = 0;
  for (std::size_t gi = 0; gi < ds.graphs.size(); ++gi) {
    const Graph& g = ds.graphs[gi];
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) {
      a << (offset + u + 1) << ", " << (offset + v + 1) << "\n";
      a << (offset + v + 1) << ", " << (offset + u + 1) << "\n";
    }
    for (int n = 0; n < g.num_nodes; ++n) {
      ind << (gi + 1) << "\n";
      if (all_node_labels) nl << (*g.node_labels)[n] << "\n";
      if (all_node_attrs) {
        for (std::size_t c = 0; c < g.node_attributes->cols(); ++c)
          na << (c ? ", " : "") << format_real((*g.node_attributes)(n, c));
        na << "\n";
      }
    }
    lab << ds.label_alphabet[ds.labels[gi]] << "\n";
    offset += g.num_nodes;
  }
  out.a = a.str();
  out.indicator = ind.str();
  out.labels = lab.str();
  if (all_node_labels) out.node_labels = nl.str();
  if (all_node_attrs) out.node_attributes = na.str();
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw FormatError("cannot write file: " + p.string());
  out << body;
}

}  // namespace

void write_tudataset(const Dataset& ds, const std::filesystem::path& root_dir) {
  std::filesystem::create_directories(root_dir);
  SerializedFiles f = serialize(ds);
  write_file(root_dir / (ds.name + "_A.txt"), f.a);
  write_file(root_dir / (ds.name + "_graph_indicator.txt"), f.indicator);
  write_file(root_dir / (ds.name + "_graph_labels.txt"), f.labels);
  if (f.node_labels)
    write_file(root_dir / (ds.name + "_node_labels.txt"), *f.node_labels);
  if (f.node_attributes)
    write_file(root_dir / (ds.name + "_node_attributes.txt"), *f.node_attributes);
}

std::string canonical_serialization(const Dataset& ds) {
  SerializedFiles f = serialize(ds);
  std::string s;
  s += "[A]\n" + f.a;
  s += "[graph_indicator]\n" + f.indicator;
  s += "[graph_labels]\n" + f.labels;
  if (f.node_labels) s += "[node_labels]\n" + *f.node_labels;
  if (f.node_attributes) s += "[node_attributes]\n" + *f.node_attributes;
  return s;
}

}  // namespace topofc
