// Feature synthesis tests: local degree profile, one-hot labels, concat,
// and equivariance properties.
#include <doctest.h>

#include <algorithm>

#include "testutil.hpp"
#include "topofc/features.hpp"

using namespace topofc;

namespace {

Graph star4() {
  Graph g;
  g.num_nodes = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}};
  return g;
}

std::vector<double> row_vec(const Matrix& m, std::size_t r) {
  auto s = m.row(r);
  return {s.begin(), s.end()};
}

// Relabels nodes by a permutation (perm[old] = new).
Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out;
  out.num_nodes = g.num_nodes;
  for (auto [a, b] : g.edges) {
    int pa = perm[a], pb = perm[b];
    out.edges.push_back({std::min(pa, pb), std::max(pa, pb)});
  }
  if (g.node_labels) {
    out.node_labels.emplace(g.num_nodes);
    for (int v = 0; v < g.num_nodes; ++v) (*out.node_labels)[perm[v]] = (*g.node_labels)[v];
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("features");

TEST_CASE("ldp on the 4-node star") {
  FeatureMatrix f = ldp(star4());
  CHECK(row_vec(f, 0) == std::vector<double>{3, 1, 1, 1, 0});
  for (std::size_t leaf : {1u, 2u, 3u})
    CHECK(row_vec(f, leaf) == std::vector<double>{1, 3, 3, 3, 0});
}

TEST_CASE("ldp on K3 and a path") {
  Graph k3;
  k3.num_nodes = 3;
  k3.edges = {{0, 1}, {0, 2}, {1, 2}};
  FeatureMatrix f = ldp(k3);
  for (std::size_t v = 0; v < 3; ++v)
    CHECK(row_vec(f, v) == std::vector<double>{2, 2, 2, 2, 0});

  Graph path;  // a-b-c
  path.num_nodes = 3;
  path.edges = {{0, 1}, {1, 2}};
  FeatureMatrix p = ldp(path);
  CHECK(row_vec(p, 1) == std::vector<double>{2, 1, 1, 1, 0});
  CHECK(row_vec(p, 0) == std::vector<double>{1, 2, 2, 2, 0});
}

TEST_CASE("ldp of an isolated node is all zeros") {
  Graph g;
  g.num_nodes = 1;
  FeatureMatrix f = ldp(g);
  CHECK(row_vec(f, 0) == std::vector<double>{0, 0, 0, 0, 0});
}

TEST_CASE("ldp neighbor std is the population deviation") {
  // path 0-1-2-3: node 1 sees degrees {1, 2} -> mean 1.5, population std 0.5;
  // single-neighbor node 0 gets std 0 (no 0/0)
  Graph g;
  g.num_nodes = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}};
  FeatureMatrix f = ldp(g);
  CHECK(f(1, 3) == doctest::Approx(1.5));
  CHECK(f(1, 4) == doctest::Approx(0.5));
  CHECK(f(0, 4) == 0.0);
}

TEST_CASE("intrinsic policy passes attributes through") {
  Graph g = star4();
  g.node_attributes.emplace(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) (*g.node_attributes)(r, c) = double(r * 4 + c);
  FeatureMatrix f = node_features(g, FeaturePolicy::intrinsic());
  CHECK(f == *g.node_attributes);
}

TEST_CASE("label one-hot over a dataset-wide alphabet") {
  Graph g = star4();
  g.node_labels = std::vector<int>{0, 2, 1, 2};
  FeatureMatrix f = node_features(g, FeaturePolicy::label_onehot(), {0, 1, 2});
  CHECK(f.cols() == 3);
  CHECK(row_vec(f, 0) == std::vector<double>{1, 0, 0});
  CHECK(row_vec(f, 1) == std::vector<double>{0, 0, 1});
  CHECK(row_vec(f, 2) == std::vector<double>{0, 1, 0});
}

TEST_CASE("inapplicable policies and degenerate dimensions are rejected") {
  Graph g = star4();  // no attributes, no labels
  CHECK_THROWS_AS(node_features(g, FeaturePolicy::intrinsic()), PolicyError);
  CHECK_THROWS_AS(node_features(g, FeaturePolicy::label_onehot()), PolicyError);

  g.node_labels = std::vector<int>{1, 1, 1, 1};  // single-symbol alphabet -> d=1
  CHECK_THROWS_AS(node_features(g, FeaturePolicy::label_onehot()), DegenerateFeatureError);

  g.node_attributes.emplace(4, 1, 0.5);  // 1-dim attributes -> d=1
  CHECK_THROWS_AS(node_features(g, FeaturePolicy::intrinsic()), DegenerateFeatureError);
  // concat with ldp fixes both
  FeatureMatrix f = node_features(
      g, FeaturePolicy::concat({FeaturePolicy::intrinsic(), FeaturePolicy::ldp()}));
  CHECK(f.cols() == 6);
}

TEST_CASE("concat output is column-ordered by part") {
  Graph g = star4();
  g.node_labels = std::vector<int>{0, 1, 0, 1};
  FeatureMatrix f = node_features(
      g, FeaturePolicy::concat({FeaturePolicy::label_onehot(), FeaturePolicy::ldp()}));
  CHECK(f.cols() == 7);
  CHECK(f(0, 0) == 1.0);  // one-hot block first
  CHECK(f(0, 2) == 3.0);  // then ldp degree column
}

TEST_CASE("policy parsing round-trips the CLI spellings") {
  for (const char* text : {"intrinsic", "labels", "ldp", "intrinsic+ldp", "labels+ldp"})
    CHECK(FeaturePolicy::parse(text).to_string() == text);
  CHECK_THROWS_AS(FeaturePolicy::parse("degree"), ArgumentError);
}

TEST_CASE("permutation equivariance of ldp and one-hot rows") {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testutil::random_er_graph(rng, 3 + int(rng.next_index(8)), 0.4);
    g.node_labels.emplace(g.num_nodes);
    for (int v = 0; v < g.num_nodes; ++v)
      (*g.node_labels)[v] = int(rng.next_index(3));

    std::vector<int> perm(g.num_nodes);
    for (int v = 0; v < g.num_nodes; ++v) perm[v] = v;
    rng.shuffle(perm);
    Graph h = permuted(g, perm);

    FeaturePolicy policy =
        FeaturePolicy::concat({FeaturePolicy::label_onehot(), FeaturePolicy::ldp()});
    FeatureMatrix fg = node_features(g, policy, {0, 1, 2});
    FeatureMatrix fh = node_features(h, policy, {0, 1, 2});
    for (int v = 0; v < g.num_nodes; ++v)
      CHECK(row_vec(fg, v) == row_vec(fh, perm[v]));
  }
}

TEST_SUITE_END();
