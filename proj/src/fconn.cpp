// fconn.cpp - Pearson correlation and functional connectivity matrices.
#include "topofc/fconn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topofc/errors.hpp"

namespace topofc {
namespace {

// Long rows of near-constant values make centered sums cancellation-prone;
// switch to Neumaier compensation past this length.
constexpr std::size_t kCompensatedThreshold = 1024;

double sum_plain(std::span<const double> v) {
  long double s = 0.0L;
  for (double x : v) s += x;
  return static_cast<double>(s);
}

double sum_compensated(std::span<const double> v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  return s + c;
}

double accumulate(std::span<const double> v) {
  return v.size() >= kCompensatedThreshold ? sum_compensated(v) : sum_plain(v);
}

struct CenteredRow {
  std::vector<double> values;  // x - mean(x)
  double norm_sq = 0.0;        // ||x - mean(x)||_2^2
};

CenteredRow center(std::span<const double> x) {
  CenteredRow row;
  double mean = accumulate(x) / static_cast<double>(x.size());
  row.values.resize(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) row.values[t] = x[t] - mean;
  std::vector<double> sq(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) sq[t] = row.values[t] * row.values[t];
  row.norm_sq = accumulate(sq);
  return row;
}

double correlate(const CenteredRow& a, const CenteredRow& b) {
  if (a.norm_sq == 0.0 || b.norm_sq == 0.0) return 0.0;
  std::vector<double> prod(a.values.size());
  for (std::size_t t = 0; t < prod.size(); ++t) prod[t] = a.values[t] * b.values[t];
  const double dot = accumulate(prod);
  // sqrt(sa*sb) keeps r at exactly +-1 for identical or reversed rows
  // (sqrt(fl(x*x)) == |x| in IEEE round-to-nearest); fall back to separate
  // roots when the product leaves the normal range
  double denom = std::sqrt(a.norm_sq * b.norm_sq);
  if (denom == 0.0 || !std::isfinite(denom))
    denom = std::sqrt(a.norm_sq) * std::sqrt(b.norm_sq);
  double r = dot / denom;
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw DimensionError("pearson: length mismatch (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
  if (x.size() < 2)
    throw DimensionError("pearson: need at least 2 samples, got " +
                         std::to_string(x.size()));
  return correlate(center(x), center(y));
}

FcMatrix functional_connectivity(const Matrix& X) {
  if (X.rows() < 1) throw DimensionError("functional_connectivity: empty feature matrix");
  if (X.cols() < 2)
    throw DimensionError("functional_connectivity: d must be >= 2, got " +
                         std::to_string(X.cols()));
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < X.cols(); ++c)
      if (!std::isfinite(X(r, c)))
        throw NumericError("non-finite feature entry at row " + std::to_string(r) +
                           ", col " + std::to_string(c));

  const std::size_t n = X.rows();
  FcMatrix fc;
  fc.n = static_cast<int>(n);
  fc.values = Matrix(n, n, kFcDiagonalSentinel);

  std::vector<CenteredRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = center(X.row(i));
    if (rows[i].norm_sq == 0.0) fc.zero_variance_rows.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double r = correlate(rows[i], rows[j]);
      fc.values(i, j) = r;
      fc.values(j, i) = r;
    }
  }
  return fc;
}

}  // namespace topofc
