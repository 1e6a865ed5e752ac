// pgh.cpp - maximum spanning forest decomposition and Betti evaluation.
#include "topofc/pgh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "topofc/errors.hpp"

namespace topofc {
namespace {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  // Returns true when the two trees were merged (x, y previously disjoint).
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    --components_;
    return true;
  }

  int components() const noexcept { return components_; }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

}  // namespace

WeightedGraph::WeightedGraph(int num_nodes, std::vector<WeightedEdge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  if (num_nodes_ <= 0) throw ArgumentError("weighted graph needs at least one node");
  std::set<std::pair<int, int>> seen;
  for (WeightedEdge& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 0 || e.b >= num_nodes_)
      throw IndexError("edge endpoint out of range [0, " + std::to_string(num_nodes_) + ")");
    if (e.a == e.b) throw ArgumentError("self-loops are not allowed in a weighted graph");
    if (!seen.insert({e.a, e.b}).second)
      throw ArgumentError("duplicate edge (" + std::to_string(e.a) + ", " +
                          std::to_string(e.b) + ")");
    if (!std::isfinite(e.w))
      throw NumericError("non-finite edge weight on (" + std::to_string(e.a) + ", " +
                         std::to_string(e.b) + ")");
  }
}

WeightedGraph WeightedGraph::from_fc(const FcMatrix& fc) {
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(fc.n) * (fc.n - 1) / 2);
  for (int i = 0; i < fc.n; ++i)
    for (int j = i + 1; j < fc.n; ++j) edges.push_back({i, j, fc.at(i, j)});
  return WeightedGraph(fc.n, std::move(edges));
}

PersistenceDecomposition decompose(const WeightedGraph& g) {
  const auto& edges = g.edges();
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (edges[x].w != edges[y].w) return edges[x].w > edges[y].w;
    if (edges[x].a != edges[y].a) return edges[x].a < edges[y].a;
    return edges[x].b < edges[y].b;
  });

  PersistenceDecomposition out;
  out.num_nodes = g.num_nodes();
  UnionFind uf(g.num_nodes());
  for (int idx : order) {
    const WeightedEdge& e = edges[idx];
    if (uf.unite(e.a, e.b))
      out.births.push_back(e.w);
    else
      out.deaths.push_back(e.w);
  }
  out.num_components = uf.components();
  std::sort(out.births.begin(), out.births.end());
  std::sort(out.deaths.begin(), out.deaths.end());
  return out;
}

BettiCurve betti_curve(const PersistenceDecomposition& d,
                       const std::vector<double>& thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (!(thresholds[i - 1] < thresholds[i]))
      throw ArgumentError("betti_curve thresholds must be strictly increasing");

  BettiCurve curve;
  curve.thresholds = thresholds;
  curve.beta0.reserve(thresholds.size());
  curve.beta1.reserve(thresholds.size());
  for (double eps : thresholds) {
    auto births_le = std::upper_bound(d.births.begin(), d.births.end(), eps) -
                     d.births.begin();
    auto deaths_gt = d.deaths.end() -
                     std::upper_bound(d.deaths.begin(), d.deaths.end(), eps);
    curve.beta0.push_back(d.num_components + static_cast<int>(births_le));
    curve.beta1.push_back(static_cast<int>(deaths_gt));
  }
  return curve;
}

std::pair<int, int> betti_oracle(const WeightedGraph& g, double eps) {
  UnionFind uf(g.num_nodes());
  int kept = 0;
  for (const WeightedEdge& e : g.edges()) {
    if (e.w > eps) {
      ++kept;
      uf.unite(e.a, e.b);
    }
  }
  int beta0 = uf.components();
  int beta1 = kept - g.num_nodes() + beta0;
  return {beta0, beta1};
}

}  // namespace topofc
