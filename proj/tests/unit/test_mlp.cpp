#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "tbc/baselines/mlp.hpp"
#include "tbc/error.hpp"
#include "tbc/num/gradient_check.hpp"

using namespace tbc::baselines;
using tbc::num::Tensor2;

TEST(MlpParams, GlorotBoundsAndShapes) {
  const auto p = MlpParams::glorot(6, 12, 3, 1);
  EXPECT_EQ(p.inputs(), 6u);
  EXPECT_EQ(p.hidden(), 12u);
  EXPECT_EQ(p.classes(), 3u);
  EXPECT_EQ(p.parameter_count(), 12u * 6 + 12 + 3 * 12 + 3);
  const double limit1 = std::sqrt(6.0 / (6 + 12));
  for (double w : p.w1.data()) EXPECT_LE(std::abs(w), limit1);
  for (double b : p.b1) EXPECT_EQ(b, 0.0);
  auto q = MlpParams::zeros(6, 12, 3);
  q.assign(p.flatten());
  EXPECT_EQ(p, q);
}

// Zero weights: the output is softmax(b2) whatever the input.
TEST(MlpForward, ZeroWeightsGiveSoftmaxOfBias) {
  auto p = MlpParams::zeros(2, 4, 2);
  p.b2 = {0.0, std::log(3.0)};
  const auto probs = mlp_probabilities(p, std::vector<double>{5.0, -1.0});
  EXPECT_NEAR(probs[0], 0.25, 1e-15);
  EXPECT_NEAR(probs[1], 0.75, 1e-15);
}

TEST(MlpGradients, MatchFiniteDifferences) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0, 1);
  Tensor2 X(6, 4);
  for (double& v : X.data()) v = n(rng);
  const std::vector<std::size_t> y{0, 1, 2, 1, 0, 2};
  const std::vector<std::size_t> batch{0, 2, 3, 5};
  auto params = MlpParams::glorot(4, 5, 3, 8);
  // Nudge biases so no ReLU sits exactly at its kink.
  for (double& b : params.b1) b = 0.05;

  auto grads = MlpParams::zeros(4, 5, 3);
  const double loss = mlp_accumulate_gradients(params, X, y, batch, grads);
  const tbc::num::LossFunction f = [&](std::span<const double> flat) {
    auto q = params;
    q.assign(flat);
    auto scratch = MlpParams::zeros(4, 5, 3);
    return mlp_accumulate_gradients(q, X, y, batch, scratch);
  };
  EXPECT_LT(tbc::num::finite_diff_check(f, params.flatten(), grads.flatten()), 1e-6);

  double expected = 0;
  for (auto r : batch) expected -= std::log(mlp_probabilities(params, X.row(r))[y[r]]);
  EXPECT_NEAR(loss, expected, 1e-12);
}

TEST(Mlp, LearnsNonlinearBoundary) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  Tensor2 X(400, 2);
  std::vector<std::size_t> y(400);
  for (std::size_t r = 0; r < 400; ++r) {
    X(r, 0) = u(rng);
    X(r, 1) = u(rng);
    y[r] = X(r, 0) * X(r, 0) + X(r, 1) * X(r, 1) < 0.4 ? 1 : 0;
  }
  MlpConfig config;
  config.hidden = 16;
  config.epochs = 200;
  config.learning_rate = 1e-2;
  const auto model = mlp_fit(X, y, 2, config);
  const auto pred = model.predict(X);
  std::size_t correct = 0;
  for (std::size_t r = 0; r < 400; ++r) correct += pred[r] == y[r];
  EXPECT_GE(correct, 360u);
  EXPECT_EQ(model.loss_history().size(), 200u);
  EXPECT_LT(model.loss_history().back(), model.loss_history().front());
}

TEST(Mlp, DefaultHiddenWidthIsTwiceInputs) {
  const Tensor2 X{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto model = mlp_fit(X, std::vector<std::size_t>{0, 1, 0}, 2, {.epochs = 1});
  EXPECT_EQ(model.params().hidden(), 6u);
}

TEST(Mlp, DeterministicForSeed) {
  const Tensor2 X{{1, 2}, {2, 1}, {0, 0}, {3, 3}};
  const std::vector<std::size_t> y{0, 1, 0, 1};
  const MlpConfig config{.epochs = 3, .batch_size = 3, .seed = 7};
  EXPECT_EQ(mlp_fit(X, y, 2, config).params(), mlp_fit(X, y, 2, config).params());
  EXPECT_EQ(mlp_predict(mlp_fit(X, y, 2, config), X.row(0)), mlp_fit(X, y, 2, config).predict(X.row(0)));
}

TEST(Mlp, Validation) {
  EXPECT_THROW((MlpConfig{.epochs = 0}).validate(), tbc::Error);
  EXPECT_THROW((MlpConfig{.batch_size = 0}).validate(), tbc::Error);
  EXPECT_THROW((MlpConfig{.learning_rate = 0}).validate(), tbc::Error);
  const Tensor2 X{{1.0}};
  EXPECT_THROW(mlp_fit(X, std::vector<std::size_t>{0, 1}, 2), tbc::Error);
}
