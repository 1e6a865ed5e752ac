// wasser.hpp - exact p-Wasserstein distances between persistence value
// sets, quantile-mean barycenters, and the p-norm embedding distance that
// approximates them (wasser module).
#pragma once

#include <span>
#include <vector>

namespace topofc {

// A births or deaths multiset, kept sorted ascending.
class ValueSet {
public:
  ValueSet() = default;
  explicit ValueSet(std::vector<double> values);  // sorts; rejects non-finite

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::span<const double> span() const noexcept { return values_; }

  bool operator==(const ValueSet&) const = default;

private:
  std::vector<double> values_;
};

// Exact 1-D p-Wasserstein distance: (integral over (0,1] of
// |Fa^-1(z) - Fb^-1(z)|^p dz)^(1/p), evaluated as a finite sum over the
// <= |a|+|b|-1 intervals where both quantile functions are constant.
double wasserstein_p(const ValueSet& a, const ValueSet& b, double p);

// Quantile-mean barycenter at the given resolution: output[j-1] is the mean
// over sets of pseudo_inverse(set, j/resolution). This is the 2-Wasserstein
// barycenter of the empirical distributions on that grid.
ValueSet barycenter(const std::vector<ValueSet>& sets, int resolution);

// ((1/m) sum_j |va_j - vb_j|^p)^(1/p) over embedding vectors of length m.
// Converges to wasserstein_p of the underlying sets as m grows, and equals
// the sorted-matching closed form exactly when m matches the set size.
double embedding_distance(std::span<const double> va, std::span<const double> vb,
                          double p, int m);

}  // namespace topofc
