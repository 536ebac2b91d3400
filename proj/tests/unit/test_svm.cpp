#include <gtest/gtest.h>

#include <random>

#include "tbc/baselines/svm.hpp"
#include "tbc/error.hpp"

using namespace tbc::baselines;
using tbc::num::Tensor2;

namespace {

struct Blobs {
  Tensor2 X;
  std::vector<std::size_t> y;
};

// Well-separated Gaussian blobs centred on the corners of a triangle.
Blobs blobs(std::size_t per_class, std::size_t classes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.5);
  Blobs b{Tensor2(per_class * classes, 2), {}};
  for (std::size_t k = 0; k < classes; ++k) {
    for (std::size_t i = 0; i < per_class; ++i) {
      const std::size_t r = k * per_class + i;
      b.X(r, 0) = (k == 1 ? 4.0 : 0.0) + noise(rng);
      b.X(r, 1) = (k == 2 ? 4.0 : 0.0) + noise(rng);
      b.y.push_back(k);
    }
  }
  return b;
}

double accuracy(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] == b[i];
  return static_cast<double>(n) / static_cast<double>(a.size());
}

}  // namespace

TEST(Svm, SeparatesLinearBlobs) {
  const auto data = blobs(50, 2, 1);
  SvmConfig config;
  config.lambda = 1e-2;
  const auto model = svm_fit(data.X, data.y, 2, config);
  EXPECT_EQ(model.class_count(), 2u);
  EXPECT_EQ(model.feature_count(), 2u);
  EXPECT_GE(accuracy(model.predict(data.X), data.y), 0.98);
}

TEST(Svm, OneVsRestThreeClasses) {
  const auto data = blobs(40, 3, 2);
  SvmConfig config;
  config.lambda = 1e-2;
  config.epochs = 50;
  const auto model = svm_fit(data.X, data.y, 3, config);
  EXPECT_GE(accuracy(model.predict(data.X), data.y), 0.95);
}

// Projection keeps every class's (w, b) inside the 1/sqrt(lambda) ball.
TEST(Svm, WeightsStayInsideProjectionBall) {
  const auto data = blobs(30, 3, 3);
  for (double lambda : {1e-4, 1e-2, 1.0}) {
    SvmConfig config;
    config.lambda = lambda;
    const auto model = svm_fit(data.X, data.y, 3, config);
    for (std::size_t k = 0; k < 3; ++k) {
      double norm2 = model.biases()[k] * model.biases()[k];
      for (std::size_t j = 0; j < 2; ++j) norm2 += model.weights()(k, j) * model.weights()(k, j);
      EXPECT_LE(norm2, 1.0 / lambda * (1 + 1e-9)) << lambda;
    }
  }
}

TEST(Svm, DeterministicForSeed) {
  const auto data = blobs(30, 2, 4);
  SvmConfig config;
  config.seed = 11;
  const auto a = svm_fit(data.X, data.y, 2, config);
  const auto b = svm_fit(data.X, data.y, 2, config);
  EXPECT_EQ(a.weights(), b.weights());
  EXPECT_EQ(a.biases(), b.biases());
}

TEST(Svm, MarginTiesGoLow) {
  const SvmModel model(Tensor2{{1.0}, {1.0}}, {0.0, 0.0}, {});
  EXPECT_EQ(model.predict(std::vector<double>{2.0}), 0u);
  EXPECT_EQ(svm_predict(model, std::vector<double>{2.0}), 0u);
  EXPECT_EQ(model.margins(std::vector<double>{2.0}), (tbc::num::Vector{2.0, 2.0}));
}

TEST(Svm, Validation) {
  SvmConfig config;
  config.lambda = 0.0;
  EXPECT_THROW(config.validate(), tbc::Error);
  config = {};
  config.epochs = 0;
  EXPECT_THROW(config.validate(), tbc::Error);
  const Tensor2 X{{1.0}, {2.0}};
  EXPECT_THROW(svm_fit(X, std::vector<std::size_t>{0, 3}, 2), tbc::Error);
  const auto model = svm_fit(X, std::vector<std::size_t>{0, 1}, 2);
  EXPECT_THROW(model.predict(std::vector<double>{1.0, 2.0}), tbc::Error);
}
