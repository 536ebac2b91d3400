#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tbc/num/tensor.hpp"

namespace tbc::baselines {

struct SvmConfig {
  double lambda = 1e-4;
  std::size_t epochs = 20;
  std::uint64_t seed = 0;

  void validate() const;
};

/// One-vs-rest linear SVM. Row k of `weights` scores class k; the bias is an
/// extra always-one feature, so it is regularised with the weights.
class SvmModel {
 public:
  SvmModel() = default;
  SvmModel(num::Tensor2 weights, num::Vector biases, SvmConfig config);

  const num::Tensor2& weights() const noexcept { return weights_; }
  const num::Vector& biases() const noexcept { return biases_; }
  const SvmConfig& config() const noexcept { return config_; }
  std::size_t class_count() const noexcept { return weights_.rows(); }
  std::size_t feature_count() const noexcept { return weights_.cols(); }

  num::Vector margins(std::span<const double> x) const;
  /// Largest margin; ties go to the lower class index.
  std::size_t predict(std::span<const double> x) const;
  std::vector<std::size_t> predict(const num::Tensor2& X) const;

 private:
  num::Tensor2 weights_;
  num::Vector biases_;
  SvmConfig config_;
};

/// Pegasos stochastic subgradient descent on
///   lambda/2 |w|^2 + mean(max(0, 1 - y (w.x + b)))
/// for each class against the rest, with step 1/(lambda t) and projection
/// onto the ball of radius 1/sqrt(lambda).
SvmModel svm_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                 const SvmConfig& config = {});
std::size_t svm_predict(const SvmModel& model, std::span<const double> x);

}  // namespace tbc::baselines
