// pgh.hpp - closed-form persistent graph homology (pgh module).
//
// A weighted graph filtered by "edge survives iff w > epsilon" decomposes
// into birth values (maximum-spanning-forest weights, one per connected
// component appearance) and death values (the remaining edge weights, one
// per independent cycle). Betti curves follow in closed form from the two
// sorted sequences.
#pragma once

#include <utility>
#include <vector>

#include "topofc/fconn.hpp"

namespace topofc {

struct WeightedEdge {
  int a = 0;  // a < b
  int b = 0;
  double w = 0.0;
};

class WeightedGraph {
public:
  // Normalizes endpoints to a < b; rejects self-loops, duplicate pairs,
  // out-of-range endpoints and non-finite weights.
  WeightedGraph(int num_nodes, std::vector<WeightedEdge> edges);

  // Complete graph over the off-diagonal entries of a connectivity matrix.
  static WeightedGraph from_fc(const FcMatrix& fc);

  int num_nodes() const noexcept { return num_nodes_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }

private:
  int num_nodes_ = 0;
  std::vector<WeightedEdge> edges_;
};

struct PersistenceDecomposition {
  std::vector<double> births;  // ascending; |births| = num_nodes - num_components
  std::vector<double> deaths;  // ascending; |deaths| = |edges| - |births|
  int num_nodes = 0;
  int num_components = 0;  // of the full weighted graph
};

struct BettiCurve {
  std::vector<double> thresholds;
  std::vector<int> beta0;
  std::vector<int> beta1;
};

// Maximum spanning forest split: births = forest weights, deaths = the rest.
// Ties broken by (weight descending, (a,b) lexicographic ascending); the
// value multisets are tie-break invariant. O(E log E).
PersistenceDecomposition decompose(const WeightedGraph& g);

// Closed-form Betti numbers at each threshold:
//   beta0(e) = num_components + #{b in births : b <= e}
//   beta1(e) = #{d in deaths : d > e}
// Thresholds must be strictly increasing.
BettiCurve betti_curve(const PersistenceDecomposition& d,
                       const std::vector<double>& thresholds);

// Reference implementation: builds the binary graph keeping edges with
// w > eps and counts components via union-find; beta1 from the Euler
// relation kept_edges - num_nodes + beta0.
std::pair<int, int> betti_oracle(const WeightedGraph& g, double eps);

}  // namespace topofc
