// MLP forward/backward tests: hand computations, gradient checks against
// finite differences, training behavior, and determinism.
#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "topofc/mlp.hpp"

using namespace topofc;

namespace {

MlpConfig small_config(int input, int hidden, int classes) {
  MlpConfig cfg;
  cfg.input_dim = input;
  cfg.hidden_dim = hidden;
  cfg.num_classes = classes;
  cfg.dropout = 0.0;
  cfg.weight_decay = 0.0;
  return cfg;
}

MlpModel random_model(const MlpConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  return MlpModel::init(cfg, rng);
}

// Two well-separated clusters around the all-zeros and all-ones corners.
void separable_clusters(int per_class, int dim, std::uint64_t seed,
                        std::vector<std::vector<double>>& X, std::vector<int>& y) {
  Rng rng(seed);
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < per_class; ++i) {
      std::vector<double> x(dim);
      for (double& v : x) v = double(c) + rng.uniform(-0.1, 0.1);
      X.push_back(std::move(x));
      y.push_back(c);
    }
}

}  // namespace

TEST_SUITE_BEGIN("mlp");

TEST_CASE("zero weights give uniform class probabilities") {
  for (int classes : {2, 3, 5}) {
    MlpModel model = random_model(small_config(4, 3, classes), 1);
    std::fill(model.w1.begin(), model.w1.end(), 0.0);
    std::fill(model.w2.begin(), model.w2.end(), 0.0);
    auto probs = forward(model, std::vector<double>{0.3, -1.0, 2.0, 0.7});
    for (double p : probs) CHECK(p == doctest::Approx(1.0 / classes));
  }
}

TEST_CASE("inference is deterministic; probabilities sum to 1") {
  MlpModel model = random_model(small_config(6, 8, 3), 17);
  Rng rng(5);
  std::vector<double> x(6);
  for (int trial = 0; trial < 50; ++trial) {
    for (double& v : x) v = rng.uniform(-3, 3);
    auto a = forward(model, x);
    auto b = forward(model, x);
    CHECK(a == b);
    double sum = 0.0;
    for (double p : a) sum += p;
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("hand-computed forward pass") {
  MlpModel model = random_model(small_config(2, 2, 2), 1);
  model.w1 = {0.5, 0.25, -0.5, 1.0};
  model.b1 = {0.1, -0.2};
  model.w2 = {1.0, 2.0, -1.0, 0.5};
  model.b2 = {0.0, 0.3};
  // x=(1,-1): z1=(0.35,-1.7) -> relu (0.35,0); z2=(0.35,-0.05)
  auto probs = forward(model, std::vector<double>{1.0, -1.0});
  const double p0 = 1.0 / (1.0 + std::exp(-0.4));
  CHECK(probs[0] == doctest::Approx(p0).epsilon(1e-12));
  CHECK(probs[1] == doctest::Approx(1.0 - p0).epsilon(1e-12));
}

TEST_CASE("dimension mismatch is rejected") {
  MlpModel model = random_model(small_config(3, 2, 2), 2);
  CHECK_THROWS_AS(forward(model, std::vector<double>{1.0}), DimensionError);
}

TEST_CASE("gradient check stays under 1e-4 on random draws") {
  Rng rng(99);
  for (int draw = 0; draw < 25; ++draw) {
    MlpConfig cfg = small_config(2 + int(rng.next_index(6)), 2 + int(rng.next_index(5)),
                                 2 + int(rng.next_index(3)));
    cfg.weight_decay = (draw % 2) ? 1e-3 : 0.0;
    MlpModel model = random_model(cfg, rng.next_u64());
    const std::size_t batch = 1 + rng.next_index(8);
    std::vector<std::vector<double>> X;
    std::vector<int> y;
    for (std::size_t i = 0; i < batch; ++i) {
      std::vector<double> x(cfg.input_dim);
      for (double& v : x) v = rng.uniform(-1, 1);
      X.push_back(std::move(x));
      y.push_back(int(rng.next_index(cfg.num_classes)));
    }
    CHECK(gradient_check(model, X, y) < 1e-4);
  }
}

TEST_CASE("softmax gradient identity: dL/db2 equals p minus onehot") {
  MlpConfig cfg = small_config(3, 4, 2);
  MlpModel model = random_model(cfg, 31);
  std::vector<std::vector<double>> X = {{0.4, -0.2, 0.9}};
  std::vector<int> y = {1};
  auto probs = forward(model, X[0]);

  const double h = 1e-7;
  for (int c = 0; c < 2; ++c) {
    MlpModel probe = model;
    probe.b2[c] += h;
    const double up = batch_loss(probe, X, y);
    probe.b2[c] -= 2 * h;
    const double down = batch_loss(probe, X, y);
    const double numeric = (up - down) / (2 * h);
    const double expected = probs[c] - (c == y[0] ? 1.0 : 0.0);
    CHECK(numeric == doctest::Approx(expected).epsilon(1e-5));
  }
}

TEST_CASE("zero input leaves layer-1 weights without influence") {
  MlpConfig cfg = small_config(3, 4, 2);
  MlpModel model = random_model(cfg, 32);
  std::vector<std::vector<double>> X = {{0.0, 0.0, 0.0}};
  std::vector<int> y = {0};
  const double base = batch_loss(model, X, y);
  MlpModel probe = model;
  for (double& w : probe.w1) w += 0.1;
  CHECK(batch_loss(probe, X, y) == base);
}

TEST_CASE("training separates two clusters to accuracy 1.0") {
  std::vector<std::vector<double>> X;
  std::vector<int> y;
  separable_clusters(20, 4, 7, X, y);
  MlpConfig cfg = small_config(4, 8, 2);
  cfg.epochs = 200;
  cfg.lr = 1e-2;
  cfg.seed = 3;
  MlpModel model = train(X, y, cfg);
  int correct = 0;
  for (std::size_t i = 0; i < X.size(); ++i)
    if (predict(model, X[i]) == y[i]) ++correct;
  CHECK(correct == int(X.size()));
}

TEST_CASE("loss after 200 epochs is below loss after 1 epoch") {
  std::vector<std::vector<double>> X;
  std::vector<int> y;
  separable_clusters(15, 3, 8, X, y);
  MlpConfig cfg = small_config(3, 6, 2);
  cfg.lr = 1e-3;
  cfg.seed = 4;

  cfg.epochs = 1;
  const double early = batch_loss(train(X, y, cfg), X, y);
  cfg.epochs = 200;
  const double late = batch_loss(train(X, y, cfg), X, y);
  CHECK(late < early);
}

TEST_CASE("single-class labels are rejected") {
  std::vector<std::vector<double>> X = {{0, 1}, {1, 0}};
  std::vector<int> y = {1, 1};
  MlpConfig cfg = small_config(2, 2, 2);
  CHECK_THROWS_AS(train(X, y, cfg), DegenerateLabelsError);
}

TEST_CASE("training is bit-reproducible for a fixed seed") {
  std::vector<std::vector<double>> X;
  std::vector<int> y;
  separable_clusters(10, 3, 9, X, y);
  MlpConfig cfg = small_config(3, 5, 2);
  cfg.dropout = 0.3;  // dropout draws come from the seeded stream too
  cfg.epochs = 20;
  cfg.seed = 12345;
  MlpModel a = train(X, y, cfg);
  MlpModel b = train(X, y, cfg);
  CHECK(a.w1 == b.w1);
  CHECK(a.b1 == b.b1);
  CHECK(a.w2 == b.w2);
  CHECK(a.b2 == b.b2);
}

TEST_CASE("parameters stay finite through aggressive training") {
  std::vector<std::vector<double>> X;
  std::vector<int> y;
  separable_clusters(10, 3, 10, X, y);
  MlpConfig cfg = small_config(3, 5, 2);
  cfg.lr = 0.5;  // large but Adam keeps steps bounded
  cfg.epochs = 50;
  MlpModel model = train(X, y, cfg);
  for (double w : model.w1) CHECK(std::isfinite(w));
  for (double w : model.w2) CHECK(std::isfinite(w));
}

TEST_CASE("config validation rejects out-of-range settings") {
  MlpConfig cfg = small_config(2, 2, 2);
  cfg.dropout = 1.0;
  CHECK_THROWS_AS(cfg.check(), ArgumentError);
  cfg = small_config(2, 2, 2);
  cfg.lr = 0.0;
  CHECK_THROWS_AS(cfg.check(), ArgumentError);
  cfg = small_config(0, 2, 2);
  CHECK_THROWS_AS(cfg.check(), ArgumentError);
}

TEST_CASE("train accepts TopoEmbedding input") {
  std::vector<TopoEmbedding> embeddings;
  std::vector<int> y;
  for (int i = 0; i < 20; ++i) {
    TopoEmbedding e;
    e.m = 2;
    e.n = 1;
    const double base = (i % 2) ? 0.9 : 0.1;
    e.v_b = {base, base};
    e.v_d = {base};
    embeddings.push_back(e);
    y.push_back(i % 2);
  }
  MlpConfig cfg = small_config(3, 4, 2);
  cfg.epochs = 100;
  cfg.lr = 1e-2;
  MlpModel model = train(embeddings, y, cfg);
  CHECK(predict(model, embeddings[0].concat()) == 0);
  CHECK(predict(model, embeddings[1].concat()) == 1);
}

TEST_SUITE_END();
