// wasser.cpp - exact quantile-function transport in one dimension.
#include "topofc/wasser.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "topofc/embed.hpp"
#include "topofc/errors.hpp"

namespace topofc {
namespace {

double pow_p(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

double root_p(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return std::sqrt(x);
  return std::pow(x, 1.0 / p);
}

}  // namespace

ValueSet::ValueSet(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_)
    if (!std::isfinite(v)) throw NumericError("non-finite value in value set");
  std::sort(values_.begin(), values_.end());
}

double wasserstein_p(const ValueSet& a, const ValueSet& b, double p) {
  if (a.empty() || b.empty())
    throw EmptySetError("wasserstein_p requires non-empty value sets");
  if (!(p >= 1.0)) throw ArgumentError("wasserstein_p requires p >= 1");

  const auto& av = a.values();
  const auto& bv = b.values();
  const std::int64_t ka = static_cast<std::int64_t>(av.size());
  const std::int64_t kb = static_cast<std::int64_t>(bv.size());
  const double denom = static_cast<double>(ka * kb);

  // Quantile function of a is constant on ((i-1)/ka, i/ka]; walk the merged
  // breakpoint grid with positions expressed as integers over ka*kb so the
  // interval boundaries are exact.
  std::int64_t i = 1, j = 1, prev = 0;
  double sum = 0.0;
  while (i <= ka && j <= kb) {
    const std::int64_t bound_a = i * kb;
    const std::int64_t bound_b = j * ka;
    const std::int64_t next = std::min(bound_a, bound_b);
    sum += pow_p(std::abs(av[i - 1] - bv[j - 1]), p) *
           (static_cast<double>(next - prev) / denom);
    if (bound_a == next) ++i;
    if (bound_b == next) ++j;
    prev = next;
  }
  return root_p(sum, p);
}

ValueSet barycenter(const std::vector<ValueSet>& sets, int resolution) {
  if (sets.empty()) throw ArgumentError("barycenter requires at least one set");
  if (resolution < 1) throw ArgumentError("barycenter resolution must be >= 1");
  for (const ValueSet& s : sets)
    if (s.empty()) throw EmptySetError("barycenter requires non-empty value sets");

  std::vector<double> out(resolution, 0.0);
  for (int j = 1; j <= resolution; ++j) {
    const double z = static_cast<double>(j) / static_cast<double>(resolution);
    double sum = 0.0;
    for (const ValueSet& s : sets) sum += pseudo_inverse(s.span(), z);
    out[j - 1] = sum / static_cast<double>(sets.size());
  }
  return ValueSet(std::move(out));
}

// Normalized as (sum/m)^(1/p), the Riemann-sum form that converges to the
// p-Wasserstein distance and reproduces the equal-size closed form at
// m = |a| = |b|. (The plain 1/m scaling only does so for p = 1.)
double embedding_distance(std::span<const double> va, std::span<const double> vb,
                          double p, int m) {
  if (static_cast<int>(va.size()) != m || static_cast<int>(vb.size()) != m)
    throw DimensionError("embedding_distance requires |va| == |vb| == m (got " +
                         std::to_string(va.size()) + ", " + std::to_string(vb.size()) +
                         ", m=" + std::to_string(m) + ")");
  if (!(p >= 1.0)) throw ArgumentError("embedding_distance requires p >= 1");
  double sum = 0.0;
  for (int k = 0; k < m; ++k) sum += pow_p(std::abs(va[k] - vb[k]), p);
  return root_p(sum / static_cast<double>(m), p);
}

}  // namespace topofc
