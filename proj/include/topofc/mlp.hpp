// mlp.hpp - two-layer perceptron with manual backpropagation (learn module).
//
// layer1 -> ReLU -> dropout -> layer2 -> softmax, trained with mini-batch
// Adam on cross-entropy plus L2 weight decay. Everything is deterministic
// for a given seed.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topofc/embed.hpp"
#include "topofc/rng.hpp"

namespace topofc {

struct MlpConfig {
  int input_dim = 0;
  int hidden_dim = 64;
  int num_classes = 2;
  double dropout = 0.3;
  double lr = 1e-3;
  double weight_decay = 1e-5;
  int epochs = 200;
  int batch_size = 64;
  std::uint64_t seed = 0;

  void check() const;
};

struct MlpModel {
  MlpConfig config;
  // row-major: w1 is hidden x input, w2 is num_classes x hidden
  std::vector<double> w1, b1, w2, b2;

  // Glorot-uniform initialization in +-sqrt(6/(fan_in+fan_out)).
  static MlpModel init(const MlpConfig& cfg, Rng& rng);

  std::size_t parameter_count() const noexcept {
    return w1.size() + b1.size() + w2.size() + b2.size();
  }
};

// One forward pass; returns class probabilities (sum 1). With train_mode on,
// dropout uses inverted scaling 1/(1-p) so inference needs no rescaling.
std::vector<double> forward(const MlpModel& model, std::span<const double> x,
                            bool train_mode, Rng& rng);

// Deterministic inference: no dropout, no rng.
std::vector<double> forward(const MlpModel& model, std::span<const double> x);

int predict(const MlpModel& model, std::span<const double> x);

// Mini-batch Adam on mean cross-entropy + (wd/2)*||theta||^2; returns the
// final-epoch model. Labels must include at least two classes.
MlpModel train(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
               const MlpConfig& cfg);
MlpModel train(const std::vector<TopoEmbedding>& embeddings, const std::vector<int>& y,
               const MlpConfig& cfg);

// Max over parameters of |g_analytic - g_numeric| / max(1e-8, |ga| + |gn|)
// against central finite differences (step 1e-5), dropout disabled.
double gradient_check(const MlpModel& model, const std::vector<std::vector<double>>& X,
                      const std::vector<int>& y);

// Mean cross-entropy over the batch plus the L2 penalty matching the
// training gradient; dropout disabled. Exposed for tests.
double batch_loss(const MlpModel& model, const std::vector<std::vector<double>>& X,
                  const std::vector<int>& y);

}  // namespace topofc
