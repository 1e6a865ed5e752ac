// mlp.cpp - forward/backward passes and the Adam training loop.
#include "topofc/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "topofc/errors.hpp"

namespace topofc {

void MlpConfig::check() const {
  if (input_dim < 1 || hidden_dim < 1 || num_classes < 1)
    throw ArgumentError("mlp dimensions must be >= 1");
  if (dropout < 0.0 || dropout >= 1.0)
    throw ArgumentError("dropout must be in [0, 1)");
  if (!(lr > 0.0)) throw ArgumentError("learning rate must be > 0");
  if (weight_decay < 0.0) throw ArgumentError("weight decay must be >= 0");
  if (epochs < 1 || batch_size < 1)
    throw ArgumentError("epochs and batch size must be >= 1");
}

MlpModel MlpModel::init(const MlpConfig& cfg, Rng& rng) {
  cfg.check();
  MlpModel model;
  model.config = cfg;
  model.w1.resize(static_cast<std::size_t>(cfg.hidden_dim) * cfg.input_dim);
  model.b1.assign(cfg.hidden_dim, 0.0);
  model.w2.resize(static_cast<std::size_t>(cfg.num_classes) * cfg.hidden_dim);
  model.b2.assign(cfg.num_classes, 0.0);
  const double r1 = std::sqrt(6.0 / (cfg.input_dim + cfg.hidden_dim));
  for (double& w : model.w1) w = rng.uniform(-r1, r1);
  const double r2 = std::sqrt(6.0 / (cfg.hidden_dim + cfg.num_classes));
  for (double& w : model.w2) w = rng.uniform(-r2, r2);
  return model;
}

namespace {

void softmax_inplace(std::vector<double>& z) {
  double mx = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - mx);
    sum += v;
  }
  for (double& v : z) v /= sum;
}

struct ForwardScratch {
  std::vector<double> hidden;      // post-ReLU, post-dropout activations
  std::vector<double> relu_alive;  // 1 when pre-activation > 0 (times keep scale)
  std::vector<double> probs;
};

void forward_into(const MlpModel& m, std::span<const double> x, bool train_mode,
                  Rng* rng, ForwardScratch& s) {
  const int H = m.config.hidden_dim;
  const int D = m.config.input_dim;
  const int C = m.config.num_classes;
  s.hidden.assign(H, 0.0);
  s.relu_alive.assign(H, 0.0);
  s.probs.assign(C, 0.0);

  for (int h = 0; h < H; ++h) {
    const double* wrow = m.w1.data() + static_cast<std::size_t>(h) * D;
    double z = m.b1[h];
    for (int d = 0; d < D; ++d) z += wrow[d] * x[d];
    if (z > 0.0) {
      s.hidden[h] = z;
      s.relu_alive[h] = 1.0;
    }
  }
  if (train_mode && m.config.dropout > 0.0) {
    const double keep = 1.0 - m.config.dropout;
    for (int h = 0; h < H; ++h) {
      if (rng->next_double() < m.config.dropout) {
        s.hidden[h] = 0.0;
        s.relu_alive[h] = 0.0;
      } else {
        s.hidden[h] /= keep;
        s.relu_alive[h] /= keep;
      }
    }
  }
  for (int c = 0; c < C; ++c) {
    const double* wrow = m.w2.data() + static_cast<std::size_t>(c) * H;
    double z = m.b2[c];
    for (int h = 0; h < H; ++h) z += wrow[h] * s.hidden[h];
    s.probs[c] = z;
  }
  softmax_inplace(s.probs);
}

struct Gradients {
  std::vector<double> w1, b1, w2, b2;

  explicit Gradients(const MlpConfig& cfg)
      : w1(static_cast<std::size_t>(cfg.hidden_dim) * cfg.input_dim, 0.0),
        b1(cfg.hidden_dim, 0.0),
        w2(static_cast<std::size_t>(cfg.num_classes) * cfg.hidden_dim, 0.0),
        b2(cfg.num_classes, 0.0) {}

  void zero() {
    std::fill(w1.begin(), w1.end(), 0.0);
    std::fill(b1.begin(), b1.end(), 0.0);
    std::fill(w2.begin(), w2.end(), 0.0);
    std::fill(b2.begin(), b2.end(), 0.0);
  }
};

// Accumulates d(cross-entropy)/d(theta) for one sample into g and returns
// the sample's loss. The caller divides by the batch size afterwards.
double backward_sample(const MlpModel& m, std::span<const double> x, int label,
                       bool train_mode, Rng* rng, ForwardScratch& s, Gradients& g) {
  forward_into(m, x, train_mode, rng, s);
  const int H = m.config.hidden_dim;
  const int D = m.config.input_dim;
  const int C = m.config.num_classes;

  // softmax + CE: dL/dz2 = p - onehot(y)
  std::vector<double> dz2(s.probs);
  dz2[label] -= 1.0;

  std::vector<double> dhidden(H, 0.0);
  for (int c = 0; c < C; ++c) {
    double* gw = g.w2.data() + static_cast<std::size_t>(c) * H;
    const double* wrow = m.w2.data() + static_cast<std::size_t>(c) * H;
    const double d2 = dz2[c];
    for (int h = 0; h < H; ++h) {
      gw[h] += d2 * s.hidden[h];
      dhidden[h] += d2 * wrow[h];
    }
    g.b2[c] += d2;
  }
  for (int h = 0; h < H; ++h) {
    const double dz1 = dhidden[h] * s.relu_alive[h];  // relu+dropout jacobian
    if (dz1 == 0.0) continue;
    double* gw = g.w1.data() + static_cast<std::size_t>(h) * D;
    for (int d = 0; d < D; ++d) gw[d] += dz1 * x[d];
    g.b1[h] += dz1;
  }
  return -std::log(std::max(s.probs[label], 1e-300));
}

struct AdamState {
  std::vector<double> m, v;
  explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

void adam_update(std::vector<double>& theta, std::span<const double> grad,
                 AdamState& state, double lr, double wd, long t) {
  constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(t));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(t));
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double g = grad[i] + wd * theta[i];
    state.m[i] = beta1 * state.m[i] + (1.0 - beta1) * g;
    state.v[i] = beta2 * state.v[i] + (1.0 - beta2) * g * g;
    const double mhat = state.m[i] / bc1;
    const double vhat = state.v[i] / bc2;
    theta[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

void check_finite(const MlpModel& m) {
  auto ok = [](const std::vector<double>& v) {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  };
  if (!ok(m.w1) || !ok(m.b1) || !ok(m.w2) || !ok(m.b2))
    throw NumericError("non-finite parameter after training step");
}

double l2_penalty(const MlpModel& m) {
  auto sq = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
  };
  return 0.5 * m.config.weight_decay * (sq(m.w1) + sq(m.b1) + sq(m.w2) + sq(m.b2));
}

}  // namespace

std::vector<double> forward(const MlpModel& model, std::span<const double> x,
                            bool train_mode, Rng& rng) {
  if (static_cast<int>(x.size()) != model.config.input_dim)
    throw DimensionError("forward: input has " + std::to_string(x.size()) +
                         " dims, model expects " + std::to_string(model.config.input_dim));
  ForwardScratch s;
  forward_into(model, x, train_mode, &rng, s);
  return s.probs;
}

std::vector<double> forward(const MlpModel& model, std::span<const double> x) {
  Rng unused(0);
  return forward(model, x, false, unused);
}

int predict(const MlpModel& model, std::span<const double> x) {
  auto probs = forward(model, x);
  return static_cast<int>(std::max_element(probs.begin(), probs.end()) - probs.begin());
}

MlpModel train(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
               const MlpConfig& cfg) {
  cfg.check();
  if (X.size() != y.size()) throw DimensionError("train: |X| != |y|");
  if (X.empty()) throw ArgumentError("train: empty training set");
  std::set<int> classes(y.begin(), y.end());
  if (classes.size() < 2)
    throw DegenerateLabelsError("training labels contain a single class");
  for (int label : y)
    if (label < 0 || label >= cfg.num_classes)
      throw ArgumentError("label " + std::to_string(label) + " outside [0, " +
                          std::to_string(cfg.num_classes) + ")");
  for (const auto& row : X)
    if (static_cast<int>(row.size()) != cfg.input_dim)
      throw DimensionError("train: sample dimension mismatch");

  Rng rng(cfg.seed);
  MlpModel model = MlpModel::init(cfg, rng);
  AdamState sw1(model.w1.size()), sb1(model.b1.size());
  AdamState sw2(model.w2.size()), sb2(model.b2.size());
  Gradients grads(cfg);
  ForwardScratch scratch;
  long t = 0;

  std::vector<std::size_t> order(X.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t end =
          std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      grads.zero();
      for (std::size_t k = start; k < end; ++k)
        backward_sample(model, X[order[k]], y[order[k]], true, &rng, scratch, grads);
      const double inv = 1.0 / static_cast<double>(end - start);
      for (double& v : grads.w1) v *= inv;
      for (double& v : grads.b1) v *= inv;
      for (double& v : grads.w2) v *= inv;
      for (double& v : grads.b2) v *= inv;
      ++t;
      adam_update(model.w1, grads.w1, sw1, cfg.lr, cfg.weight_decay, t);
      adam_update(model.b1, grads.b1, sb1, cfg.lr, cfg.weight_decay, t);
      adam_update(model.w2, grads.w2, sw2, cfg.lr, cfg.weight_decay, t);
      adam_update(model.b2, grads.b2, sb2, cfg.lr, cfg.weight_decay, t);
      check_finite(model);
    }
  }
  return model;
}

MlpModel train(const std::vector<TopoEmbedding>& embeddings, const std::vector<int>& y,
               const MlpConfig& cfg) {
  std::vector<std::vector<double>> X;
  X.reserve(embeddings.size());
  for (const TopoEmbedding& e : embeddings) X.push_back(e.concat());
  return train(X, y, cfg);
}

double batch_loss(const MlpModel& model, const std::vector<std::vector<double>>& X,
                  const std::vector<int>& y) {
  if (X.size() != y.size() || X.empty())
    throw DimensionError("batch_loss: bad batch");
  ForwardScratch s;
  double loss = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    forward_into(model, X[i], false, nullptr, s);
    loss += -std::log(std::max(s.probs[y[i]], 1e-300));
  }
  return loss / static_cast<double>(X.size()) + l2_penalty(model);
}

double gradient_check(const MlpModel& model, const std::vector<std::vector<double>>& X,
                      const std::vector<int>& y) {
  if (X.size() != y.size() || X.empty() || X.size() > 8)
    throw ArgumentError("gradient_check expects a batch of 1..8 samples");

  // analytic: mean CE gradient + weight decay term
  Gradients g(model.config);
  ForwardScratch s;
  for (std::size_t i = 0; i < X.size(); ++i)
    backward_sample(model, X[i], y[i], false, nullptr, s, g);
  const double inv = 1.0 / static_cast<double>(X.size());
  const double wd = model.config.weight_decay;

  MlpModel probe = model;
  const double h = 1e-5;
  double max_rel = 0.0;
  auto check_block = [&](std::vector<double>& theta, const std::vector<double>& grad) {
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double ga = grad[i] * inv + wd * theta[i];
      const double saved = theta[i];
      theta[i] = saved + h;
      const double up = batch_loss(probe, X, y);
      theta[i] = saved - h;
      const double down = batch_loss(probe, X, y);
      theta[i] = saved;
      const double gn = (up - down) / (2.0 * h);
      const double rel = std::abs(ga - gn) / std::max(1e-8, std::abs(ga) + std::abs(gn));
      max_rel = std::max(max_rel, rel);
    }
  };
  check_block(probe.w1, g.w1);
  check_block(probe.b1, g.b1);
  check_block(probe.w2, g.w2);
  check_block(probe.b2, g.b2);
  return max_rel;
}

}  // namespace topofc
