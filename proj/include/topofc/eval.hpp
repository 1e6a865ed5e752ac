// eval.hpp - evaluation protocols and metrics for the classifier
// (learn module).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "topofc/mlp.hpp"

namespace topofc {

// Disjoint index folds preserving class proportions to within one sample
// per class per fold. Every class needs at least k members.
std::vector<std::vector<int>> stratified_kfold(const std::vector<int>& labels, int k,
                                               std::uint64_t seed);

// Support-weighted mean of per-class F1 (2PR/(P+R), 0 when P+R=0).
double weighted_f1(const std::vector<int>& preds, const std::vector<int>& labels);

struct Protocol {
  enum class Kind { kfold, splits };

  Kind kind = Kind::kfold;
  int count = 5;  // folds, or number of random 80/10/10 splits

  // Accepts "kfold:K" and "splits:N".
  static Protocol parse(const std::string& text);
  std::string to_string() const;
};

struct FoldMetrics {
  double accuracy = 0.0;
  double weighted_f1 = 0.0;
};

struct EvalReport {
  // Pooled over all held-out predictions; accuracy == trace/sum of confusion.
  double accuracy = 0.0;
  double weighted_f1 = 0.0;
  std::vector<FoldMetrics> per_fold;
  std::vector<std::vector<long>> confusion;  // [true][pred]

  double mean_accuracy() const;
  double std_accuracy() const;
  double mean_weighted_f1() const;
  double std_weighted_f1() const;
};

struct CrossvalOptions {
  Protocol protocol;
  bool standardize = true;  // per training fold, training statistics only
  int workers = 1;
};

// Runs the protocol over precomputed feature vectors. Each fold/split trains
// with a seed derived from (cfg.seed, fold index), so results are identical
// for any worker count.
EvalReport crossval(const std::vector<std::vector<double>>& X,
                    const std::vector<int>& labels, const MlpConfig& cfg,
                    const CrossvalOptions& options);

// Column-wise standardization fitted on the training rows only.
struct Standardizer {
  std::vector<double> mean, scale;

  static Standardizer fit(const std::vector<std::vector<double>>& X,
                          const std::vector<int>& rows);
  std::vector<double> apply(const std::vector<double>& x) const;
};

}  // namespace topofc
