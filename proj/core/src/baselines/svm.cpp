#include "tbc/baselines/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tbc/baselines/tree.hpp"
#include "tbc/error.hpp"
#include "tbc/num/functions.hpp"

namespace tbc::baselines {

void SvmConfig::validate() const {
  if (!(lambda > 0.0)) throw Error("SVM lambda must be positive");
  if (epochs == 0) throw Error("SVM needs at least one epoch");
}

SvmModel::SvmModel(num::Tensor2 weights, num::Vector biases, SvmConfig config)
    : weights_(std::move(weights)), biases_(std::move(biases)), config_(config) {
  if (biases_.size() != weights_.rows()) throw Error("SVM bias count does not match class count");
}

num::Vector SvmModel::margins(std::span<const double> x) const {
  return num::affine(x, weights_, biases_);
}

std::size_t SvmModel::predict(std::span<const double> x) const { return num::argmax(margins(x)); }

std::vector<std::size_t> SvmModel::predict(const num::Tensor2& X) const {
  std::vector<std::size_t> out(X.rows());
  for (std::size_t r = 0; r < X.rows(); ++r) out[r] = predict(X.row(r));
  return out;
}

SvmModel svm_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                 const SvmConfig& config) {
  config.validate();
  detail::check_training_data(X, y, classes);
  const auto n = X.rows();
  const auto d = X.cols();
  const double radius = 1.0 / std::sqrt(config.lambda);

  num::Tensor2 weights(classes, d);
  num::Vector biases(classes, 0.0);
  std::vector<std::size_t> order(n);

  for (std::size_t k = 0; k < classes; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::iota(order.begin(), order.end(), std::size_t{0});

    // w is stored as scale * v so the shrink step is O(1).
    std::vector<double> v(d, 0.0);
    double v_bias = 0.0;
    double scale = 1.0;
    double norm_sq = 0.0;  // |scale * (v, v_bias)|^2
    std::uint64_t t = 0;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      for (auto i : order) {
        ++t;
        const double eta = 1.0 / (config.lambda * static_cast<double>(t));
        const auto x = X.row(i);
        const double target = y[i] == k ? 1.0 : -1.0;

        double dot = v_bias;
        for (std::size_t j = 0; j < d; ++j) dot += v[j] * x[j];
        const double margin = target * scale * dot;

        const double shrink = 1.0 - eta * config.lambda;
        if (shrink <= 0.0) {
          std::fill(v.begin(), v.end(), 0.0);
          v_bias = 0.0;
          scale = 1.0;
          norm_sq = 0.0;
        } else {
          scale *= shrink;
          norm_sq *= shrink * shrink;
        }

        if (margin < 1.0) {
          const double step = eta * target / scale;
          double x_sq = 1.0;
          double vx = v_bias;
          for (std::size_t j = 0; j < d; ++j) {
            vx += v[j] * x[j];
            x_sq += x[j] * x[j];
          }
          for (std::size_t j = 0; j < d; ++j) v[j] += step * x[j];
          v_bias += step;
          // |s(v + a x)|^2 = |s v|^2 + 2 s^2 a (v.x) + s^2 a^2 |x|^2
          norm_sq += 2.0 * scale * scale * step * vx + scale * scale * step * step * x_sq;
        }

        if (norm_sq > radius * radius) {
          const double f = radius / std::sqrt(norm_sq);
          scale *= f;
          norm_sq = radius * radius;
        }
        // Renormalise occasionally so scale does not underflow.
        if (scale < 1e-100) {
          for (auto& w : v) w *= scale;
          v_bias *= scale;
          scale = 1.0;
        }
      }
    }
    for (std::size_t j = 0; j < d; ++j) weights(k, j) = scale * v[j];
    biases[k] = scale * v_bias;
  }
  return SvmModel(std::move(weights), std::move(biases), config);
}

std::size_t svm_predict(const SvmModel& model, std::span<const double> x) { return model.predict(x); }

}  // namespace tbc::baselines
