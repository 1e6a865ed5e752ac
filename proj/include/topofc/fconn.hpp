// fconn.hpp - functional connectivity from pairwise Pearson correlation
// of node feature rows (fconn module).
#pragma once

#include <limits>
#include <span>
#include <vector>

#include "topofc/matrix.hpp"

namespace topofc {

// Diagonal entries of an FcMatrix are excluded from analysis by definition;
// they are stored as NaN so accidental consumption is loud.
inline constexpr double kFcDiagonalSentinel = std::numeric_limits<double>::quiet_NaN();

struct FcMatrix {
  int n = 0;
  Matrix values;                       // n x n, symmetric, NaN on the diagonal
  std::vector<int> zero_variance_rows; // rows whose centered norm is exactly 0

  double at(int i, int j) const { return values(i, j); }
};

// Centered-cosine Pearson correlation, clamped to [-1, 1]. Either vector
// with zero centered norm yields 0. Lengths must match and be >= 2.
double pearson(std::span<const double> x, std::span<const double> y);

// Correlation of every unordered node pair of X (one row per node).
// Each pair is computed once and mirrored, so the result is bitwise
// symmetric. Requires d >= 2 columns and finite entries.
FcMatrix functional_connectivity(const Matrix& X);

}  // namespace topofc
