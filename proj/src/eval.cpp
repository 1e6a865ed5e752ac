// eval.cpp - stratified folds, F1 scoring, and the cross-validation loop.
#include "topofc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "topofc/errors.hpp"
#include "topofc/workers.hpp"

namespace topofc {

std::vector<std::vector<int>> stratified_kfold(const std::vector<int>& labels, int k,
                                               std::uint64_t seed) {
  if (k < 2) throw ArgumentError("stratified_kfold requires k >= 2");
  if (labels.empty()) throw ArgumentError("stratified_kfold: empty labels");

  std::map<int, std::vector<int>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i)
    by_class[labels[i]].push_back(static_cast<int>(i));
  for (const auto& [cls, members] : by_class)
    if (static_cast<int>(members.size()) < k)
      throw StratificationError("class " + std::to_string(cls) + " has " +
                                std::to_string(members.size()) +
                                " members, fewer than k=" + std::to_string(k));

  Rng rng(seed);
  std::vector<std::vector<int>> folds(k);
  for (auto& [cls, members] : by_class) {
    rng.shuffle(members);
    // deal round-robin from a random starting fold so no fold is
    // systematically the largest
    const std::size_t offset = rng.next_index(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < members.size(); ++i)
      folds[(offset + i) % k].push_back(members[i]);
  }
  for (auto& fold : folds) std::sort(fold.begin(), fold.end());
  return folds;
}

double weighted_f1(const std::vector<int>& preds, const std::vector<int>& labels) {
  if (preds.size() != labels.size() || preds.empty())
    throw DimensionError("weighted_f1: length mismatch or empty input");
  int num_classes = 0;
  for (std::size_t i = 0; i < preds.size(); ++i)
    num_classes = std::max({num_classes, preds[i] + 1, labels[i] + 1});

  std::vector<long> tp(num_classes, 0), fp(num_classes, 0), fn(num_classes, 0),
      support(num_classes, 0);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    support[labels[i]]++;
    if (preds[i] == labels[i])
      tp[labels[i]]++;
    else {
      fp[preds[i]]++;
      fn[labels[i]]++;
    }
  }
  double sum = 0.0;
  for (int c = 0; c < num_classes; ++c) {
    const double precision_den = static_cast<double>(tp[c] + fp[c]);
    const double recall_den = static_cast<double>(tp[c] + fn[c]);
    const double precision = precision_den > 0 ? tp[c] / precision_den : 0.0;
    const double recall = recall_den > 0 ? tp[c] / recall_den : 0.0;
    const double f1 =
        (precision + recall) > 0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
    sum += f1 * static_cast<double>(support[c]);
  }
  return sum / static_cast<double>(labels.size());
}

Protocol Protocol::parse(const std::string& text) {
  auto parse_count = [&](std::size_t prefix_len) {
    try {
      int v = std::stoi(text.substr(prefix_len));
      if (v < 1) throw ArgumentError("protocol count must be >= 1");
      return v;
    } catch (const std::logic_error&) {
      throw ArgumentError("bad protocol count in '" + text + "'");
    }
  };
  if (text.rfind("kfold:", 0) == 0) {
    Protocol p{Kind::kfold, parse_count(6)};
    if (p.count < 2) throw ArgumentError("kfold protocol requires k >= 2");
    return p;
  }
  if (text.rfind("splits:", 0) == 0) return {Kind::splits, parse_count(7)};
  throw ArgumentError("unknown protocol '" + text + "' (expected kfold:K or splits:N)");
}

std::string Protocol::to_string() const {
  return (kind == Kind::kfold ? "kfold:" : "splits:") + std::to_string(count);
}

namespace {

double mean_of(const std::vector<FoldMetrics>& folds, double FoldMetrics::*field) {
  double s = 0.0;
  for (const auto& f : folds) s += f.*field;
  return folds.empty() ? 0.0 : s / static_cast<double>(folds.size());
}

double std_of(const std::vector<FoldMetrics>& folds, double FoldMetrics::*field) {
  if (folds.empty()) return 0.0;
  const double mu = mean_of(folds, field);
  double s = 0.0;
  for (const auto& f : folds) s += (f.*field - mu) * (f.*field - mu);
  return std::sqrt(s / static_cast<double>(folds.size()));
}

}  // namespace

double EvalReport::mean_accuracy() const { return mean_of(per_fold, &FoldMetrics::accuracy); }
double EvalReport::std_accuracy() const { return std_of(per_fold, &FoldMetrics::accuracy); }
double EvalReport::mean_weighted_f1() const {
  return mean_of(per_fold, &FoldMetrics::weighted_f1);
}
double EvalReport::std_weighted_f1() const {
  return std_of(per_fold, &FoldMetrics::weighted_f1);
}

Standardizer Standardizer::fit(const std::vector<std::vector<double>>& X,
                               const std::vector<int>& rows) {
  if (rows.empty()) throw ArgumentError("standardizer: no training rows");
  const std::size_t d = X[rows[0]].size();
  Standardizer s;
  s.mean.assign(d, 0.0);
  s.scale.assign(d, 1.0);
  for (int r : rows)
    for (std::size_t c = 0; c < d; ++c) s.mean[c] += X[r][c];
  for (double& m : s.mean) m /= static_cast<double>(rows.size());
  std::vector<double> var(d, 0.0);
  for (int r : rows)
    for (std::size_t c = 0; c < d; ++c)
      var[c] += (X[r][c] - s.mean[c]) * (X[r][c] - s.mean[c]);
  for (std::size_t c = 0; c < d; ++c) {
    var[c] /= static_cast<double>(rows.size());
    if (var[c] > 0.0) s.scale[c] = 1.0 / std::sqrt(var[c]);
  }
  return s;
}

std::vector<double> Standardizer::apply(const std::vector<double>& x) const {
  std::vector<double> out(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) out[c] = (x[c] - mean[c]) * scale[c];
  return out;
}

namespace {

struct FoldResult {
  FoldMetrics metrics;
  std::vector<int> eval_indices;
  std::vector<int> preds;
};

// Train on train_rows, predict eval_rows. All state local; safe to run on
// any worker.
FoldResult run_fold(const std::vector<std::vector<double>>& X,
                    const std::vector<int>& labels, const std::vector<int>& train_rows,
                    const std::vector<int>& eval_rows, MlpConfig cfg, bool standardize,
                    std::uint64_t fold_seed) {
  cfg.seed = fold_seed;
  Standardizer stand;
  if (standardize) stand = Standardizer::fit(X, train_rows);
  auto transform = [&](int row) { return standardize ? stand.apply(X[row]) : X[row]; };

  std::vector<std::vector<double>> train_x;
  std::vector<int> train_y;
  train_x.reserve(train_rows.size());
  for (int r : train_rows) {
    train_x.push_back(transform(r));
    train_y.push_back(labels[r]);
  }
  MlpModel model = train(train_x, train_y, cfg);

  FoldResult out;
  out.eval_indices = eval_rows;
  std::vector<int> eval_labels;
  for (int r : eval_rows) {
    out.preds.push_back(predict(model, transform(r)));
    eval_labels.push_back(labels[r]);
  }
  long correct = 0;
  for (std::size_t i = 0; i < out.preds.size(); ++i)
    if (out.preds[i] == eval_labels[i]) ++correct;
  out.metrics.accuracy =
      static_cast<double>(correct) / static_cast<double>(eval_rows.size());
  out.metrics.weighted_f1 = weighted_f1(out.preds, eval_labels);
  return out;
}

}  // namespace

EvalReport crossval(const std::vector<std::vector<double>>& X,
                    const std::vector<int>& labels, const MlpConfig& cfg,
                    const CrossvalOptions& options) {
  if (X.size() != labels.size() || X.empty())
    throw DimensionError("crossval: |X| != |labels| or empty input");

  // (train, eval) index pairs per fold/split, derived deterministically
  // from the base seed before any parallel work starts
  std::vector<std::pair<std::vector<int>, std::vector<int>>> plans;
  if (options.protocol.kind == Protocol::Kind::kfold) {
    auto folds = stratified_kfold(labels, options.protocol.count, cfg.seed);
    for (std::size_t f = 0; f < folds.size(); ++f) {
      std::vector<int> train_rows;
      for (std::size_t other = 0; other < folds.size(); ++other)
        if (other != f)
          train_rows.insert(train_rows.end(), folds[other].begin(), folds[other].end());
      std::sort(train_rows.begin(), train_rows.end());
      plans.emplace_back(std::move(train_rows), folds[f]);
    }
  } else {
    // N random 80/10/10 train/val/test splits; the model from the final
    // epoch is evaluated on the test portion
    Rng rng(derive_seed(cfg.seed, 0x5157ULL));
    const std::size_t n = labels.size();
    for (int s = 0; s < options.protocol.count; ++s) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      const std::size_t train_end = (n * 8) / 10;
      const std::size_t val_end = (n * 9) / 10;
      std::vector<int> train_rows(perm.begin(), perm.begin() + train_end);
      std::vector<int> test_rows(perm.begin() + val_end, perm.end());
      std::sort(train_rows.begin(), train_rows.end());
      std::sort(test_rows.begin(), test_rows.end());
      plans.emplace_back(std::move(train_rows), std::move(test_rows));
    }
  }

  std::vector<FoldResult> results(plans.size());
  parallel_for(plans.size(), options.workers, [&](std::size_t f) {
    results[f] = run_fold(X, labels, plans[f].first, plans[f].second, cfg,
                          options.standardize, derive_seed(cfg.seed, f + 1));
  });

  int num_classes = cfg.num_classes;
  EvalReport report;
  report.confusion.assign(num_classes, std::vector<long>(num_classes, 0));
  std::vector<int> pooled_preds, pooled_labels;
  for (const FoldResult& r : results) {
    report.per_fold.push_back(r.metrics);
    for (std::size_t i = 0; i < r.preds.size(); ++i) {
      const int truth = labels[r.eval_indices[i]];
      report.confusion[truth][r.preds[i]]++;
      pooled_preds.push_back(r.preds[i]);
      pooled_labels.push_back(truth);
    }
  }
  long trace = 0, total = 0;
  for (int c = 0; c < num_classes; ++c) {
    trace += report.confusion[c][c];
    for (int d = 0; d < num_classes; ++d) total += report.confusion[c][d];
  }
  report.accuracy = total > 0 ? static_cast<double>(trace) / static_cast<double>(total) : 0.0;
  report.weighted_f1 = weighted_f1(pooled_preds, pooled_labels);
  return report;
}

}  // namespace topofc
