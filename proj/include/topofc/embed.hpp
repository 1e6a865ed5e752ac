// embed.hpp - fixed-dimensional embeddings of persistence value sets via
// inverse transform sampling (embed module).
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "topofc/pgh.hpp"

namespace topofc {

struct TopoEmbedding {
  std::vector<double> v_b;  // length m, nondecreasing
  std::vector<double> v_d;  // length n, nondecreasing
  int m = 0;
  int n = 0;
  bool degenerate_b = false;  // birth set was empty; v_b is all zeros
  bool degenerate_d = false;

  // [v_b; v_d], the classifier input
  std::vector<double> concat() const;
};

struct MnPolicy {
  enum class Kind { max, min, avg, fixed };

  Kind kind = Kind::avg;
  int fixed_m = 0;
  int fixed_n = 0;

  static MnPolicy max() { return {Kind::max, 0, 0}; }
  static MnPolicy min() { return {Kind::min, 0, 0}; }
  static MnPolicy avg() { return {Kind::avg, 0, 0}; }
  static MnPolicy fixed(int m, int n);

  // Accepts: max, min, avg, fixed:M,N
  static MnPolicy parse(const std::string& text);
  std::string to_string() const;
};

// Per-graph inputs to m/n selection.
struct GraphSetStats {
  int num_nodes = 0;
  std::int64_t birth_count = 0;
  std::int64_t death_count = 0;
};

// Empirical CDF of a sorted multiset: #{v in s : v <= x} / |s|.
double empirical_cdf(std::span<const double> sorted_values, double x);

// Pseudo-inverse (quantile function): smallest value whose CDF reaches z,
// for 0 < z <= 1. Right-continuous step function over the sorted multiset.
double pseudo_inverse(std::span<const double> sorted_values, double z);

// Samples both pseudo-inverses at j/m (j=1..m) and j/n. Empty sets embed
// as zero vectors with the matching degeneracy flag.
TopoEmbedding embed(const PersistenceDecomposition& d, int m, int n);

// Dataset-level choice of (m, n) from per-graph set cardinalities. avg
// rounds half away from zero; min/avg results are clamped to >= 1.
std::pair<int, int> select_mn(const std::vector<GraphSetStats>& stats,
                              const MnPolicy& policy);

}  // namespace topofc
