// embed.cpp - inverse transform sampling of persistence value sets.
#include "topofc/embed.hpp"

#include <algorithm>
#include <cmath>

#include "topofc/errors.hpp"

namespace topofc {

std::vector<double> TopoEmbedding::concat() const {
  std::vector<double> out;
  out.reserve(v_b.size() + v_d.size());
  out.insert(out.end(), v_b.begin(), v_b.end());
  out.insert(out.end(), v_d.begin(), v_d.end());
  return out;
}

MnPolicy MnPolicy::fixed(int m, int n) {
  if (m < 1 || n < 1)
    throw ArgumentError("fixed mn policy requires m >= 1 and n >= 1");
  return {Kind::fixed, m, n};
}

MnPolicy MnPolicy::parse(const std::string& text) {
  if (text == "max") return max();
  if (text == "min") return min();
  if (text == "avg") return avg();
  if (text.rfind("fixed:", 0) == 0) {
    std::string rest = text.substr(6);
    std::size_t comma = rest.find(',');
    if (comma == std::string::npos)
      throw ArgumentError("fixed mn policy syntax is fixed:M,N");
    try {
      int m = std::stoi(rest.substr(0, comma));
      int n = std::stoi(rest.substr(comma + 1));
      return fixed(m, n);
    } catch (const std::logic_error&) {
      throw ArgumentError("fixed mn policy syntax is fixed:M,N");
    }
  }
  throw ArgumentError("unknown mn policy '" + text + "' (expected max, min, avg, fixed:M,N)");
}

std::string MnPolicy::to_string() const {
  switch (kind) {
    case Kind::max: return "max";
    case Kind::min: return "min";
    case Kind::avg: return "avg";
    case Kind::fixed:
      return "fixed:" + std::to_string(fixed_m) + "," + std::to_string(fixed_n);
  }
  return "";
}

double empirical_cdf(std::span<const double> s, double x) {
  if (s.empty()) throw EmptySetError("empirical_cdf of an empty set");
  auto le = std::upper_bound(s.begin(), s.end(), x) - s.begin();
  return static_cast<double>(le) / static_cast<double>(s.size());
}

double pseudo_inverse(std::span<const double> s, double z) {
  if (s.empty()) throw EmptySetError("pseudo_inverse of an empty set");
  if (!(z > 0.0) || z > 1.0)
    throw ArgumentError("pseudo_inverse requires 0 < z <= 1");
  const double k = static_cast<double>(s.size());
  // smallest 1-based index i with F(s[i-1]) = i/k >= z
  std::size_t lo = 1, hi = s.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (static_cast<double>(mid) / k >= z)
      hi = mid;
    else
      lo = mid + 1;
  }
  return s[lo - 1];
}

TopoEmbedding embed(const PersistenceDecomposition& d, int m, int n) {
  if (m < 1 || n < 1) throw ArgumentError("embed requires m >= 1 and n >= 1");
  TopoEmbedding out;
  out.m = m;
  out.n = n;

  auto sample = [](const std::vector<double>& s, int count, bool& degenerate) {
    std::vector<double> v(count, 0.0);
    if (s.empty()) {
      degenerate = true;
      return v;
    }
    for (int j = 1; j <= count; ++j)
      v[j - 1] = pseudo_inverse(s, static_cast<double>(j) / static_cast<double>(count));
    return v;
  };
  out.v_b = sample(d.births, m, out.degenerate_b);
  out.v_d = sample(d.deaths, n, out.degenerate_d);
  return out;
}

namespace {

// round half away from zero, platform-independent
int round_half_away(double x) {
  return static_cast<int>(x >= 0.0 ? std::floor(x + 0.5) : std::ceil(x - 0.5));
}

}  // namespace

std::pair<int, int> select_mn(const std::vector<GraphSetStats>& stats,
                              const MnPolicy& policy) {
  if (policy.kind == MnPolicy::Kind::fixed) return {policy.fixed_m, policy.fixed_n};
  if (stats.empty()) throw ArgumentError("select_mn requires non-empty stats");
  for (const auto& s : stats)
    if (s.birth_count < 0 || s.death_count < 0)
      throw ArgumentError("select_mn counts must be >= 0");

  std::int64_t max_b = 0, max_d = 0;
  std::int64_t min_b = stats.front().birth_count, min_d = stats.front().death_count;
  double sum_b = 0.0, sum_d = 0.0;
  for (const auto& s : stats) {
    max_b = std::max(max_b, s.birth_count);
    max_d = std::max(max_d, s.death_count);
    min_b = std::min(min_b, s.birth_count);
    min_d = std::min(min_d, s.death_count);
    sum_b += static_cast<double>(s.birth_count);
    sum_d += static_cast<double>(s.death_count);
  }
  const double count = static_cast<double>(stats.size());
  switch (policy.kind) {
    case MnPolicy::Kind::max:
      return {static_cast<int>(max_b), static_cast<int>(max_d)};
    case MnPolicy::Kind::min:
      return {std::max(1, static_cast<int>(min_b)), std::max(1, static_cast<int>(min_d))};
    case MnPolicy::Kind::avg:
      return {std::max(1, round_half_away(sum_b / count)),
              std::max(1, round_half_away(sum_d / count))};
    case MnPolicy::Kind::fixed:
      break;
  }
  return {policy.fixed_m, policy.fixed_n};
}

}  // namespace topofc
