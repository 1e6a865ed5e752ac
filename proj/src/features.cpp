// features.cpp - intrinsic / one-hot / degree-profile feature synthesis.
#include "topofc/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace topofc {

FeaturePolicy FeaturePolicy::concat(std::vector<FeaturePolicy> parts) {
  if (parts.empty()) throw ArgumentError("concat feature policy needs at least one part");
  return {Kind::concat, std::move(parts)};
}

FeaturePolicy FeaturePolicy::parse(const std::string& text) {
  std::vector<FeaturePolicy> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find('+', start);
    std::string atom = text.substr(start, pos == std::string::npos ? pos : pos - start);
    if (atom == "intrinsic")
      parts.push_back(intrinsic());
    else if (atom == "labels")
      parts.push_back(label_onehot());
    else if (atom == "ldp")
      parts.push_back(ldp());
    else
      throw ArgumentError("unknown feature policy '" + atom + "' (expected " +
                          "intrinsic, labels, ldp, or '+' combinations)");
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() == 1) return parts.front();
  return concat(std::move(parts));
}

std::string FeaturePolicy::to_string() const {
  switch (kind) {
    case Kind::intrinsic: return "intrinsic";
    case Kind::label_onehot: return "labels";
    case Kind::ldp: return "ldp";
    case Kind::concat: {
      std::string s;
      for (const auto& p : parts) s += (s.empty() ? "" : "+") + p.to_string();
      return s;
    }
  }
  return "";
}

FeatureMatrix ldp(const Graph& g) {
  std::vector<int> degree(g.num_nodes, 0);
  std::vector<std::vector<int>> neighbors(g.num_nodes);
  for (auto [a, b] : g.edges) {
    degree[a]++;
    degree[b]++;
    neighbors[a].push_back(b);
    neighbors[b].push_back(a);
  }

  FeatureMatrix out(g.num_nodes, 5);
  for (int v = 0; v < g.num_nodes; ++v) {
    if (neighbors[v].empty()) continue;  // row stays all-zero
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int u : neighbors[v]) {
      double d = degree[u];
      mn = std::min(mn, d);
      mx = std::max(mx, d);
      sum += d;
    }
    double k = static_cast<double>(neighbors[v].size());
    double mean = sum / k;
    double var = 0.0;
    for (int u : neighbors[v]) var += (degree[u] - mean) * (degree[u] - mean);
    var /= k;  // population variance; defined for single-neighbor nodes
    out(v, 0) = degree[v];
    out(v, 1) = mn;
    out(v, 2) = mx;
    out(v, 3) = mean;
    out(v, 4) = std::sqrt(var);
  }
  return out;
}

namespace {

FeatureMatrix onehot_features(const Graph& g, const std::vector<int>& alphabet_in) {
  if (!g.node_labels)
    throw PolicyError("label_onehot policy requires node labels, which this graph lacks");
  std::vector<int> alphabet = alphabet_in;
  if (alphabet.empty()) {
    std::set<int> distinct(g.node_labels->begin(), g.node_labels->end());
    alphabet.assign(distinct.begin(), distinct.end());
  }
  FeatureMatrix out(g.num_nodes, alphabet.size());
  for (int v = 0; v < g.num_nodes; ++v) {
    int lab = (*g.node_labels)[v];
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), lab);
    if (it == alphabet.end() || *it != lab)
      throw PolicyError("node label " + std::to_string(lab) +
                        " not present in the label alphabet");
    out(v, static_cast<std::size_t>(it - alphabet.begin())) = 1.0;
  }
  return out;
}

FeatureMatrix features_no_dim_check(const Graph& g, const FeaturePolicy& policy,
                                    const std::vector<int>& alphabet) {
  switch (policy.kind) {
    case FeaturePolicy::Kind::intrinsic:
      if (!g.node_attributes)
        throw PolicyError("intrinsic policy requires node attributes, which this graph lacks");
      return *g.node_attributes;
    case FeaturePolicy::Kind::label_onehot:
      return onehot_features(g, alphabet);
    case FeaturePolicy::Kind::ldp:
      return ldp(g);
    case FeaturePolicy::Kind::concat: {
      std::vector<FeatureMatrix> blocks;
      std::size_t total = 0;
      for (const auto& part : policy.parts) {
        blocks.push_back(features_no_dim_check(g, part, alphabet));
        total += blocks.back().cols();
      }
      FeatureMatrix out(g.num_nodes, total);
      std::size_t col = 0;
      for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) out(r, col + c) = b(r, c);
        col += b.cols();
      }
      return out;
    }
  }
  throw ArgumentError("invalid feature policy kind");
}

}  // namespace

FeatureMatrix node_features(const Graph& g, const FeaturePolicy& policy,
                            const std::vector<int>& label_alphabet) {
  FeatureMatrix out = features_no_dim_check(g, policy, label_alphabet);
  for (double v : out.data())
    if (!std::isfinite(v)) throw NumericError("non-finite feature value");
  if (out.cols() < 2)
    throw DegenerateFeatureError(
        "feature policy '" + policy.to_string() + "' produced d=" +
        std::to_string(out.cols()) +
        " < 2; correlations would be degenerate (consider concatenating with ldp)");
  return out;
}

}  // namespace topofc
