#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tbc/num/tensor.hpp"

namespace tbc::baselines {

struct MlpConfig {
  std::size_t epochs = 20;
  std::size_t batch_size = 32;
  double learning_rate = 1e-3;
  std::uint64_t seed = 0;
  /// Hidden width; zero means twice the input width.
  std::size_t hidden = 0;

  void validate() const;
};

/// Two-layer perceptron: softmax(W2 relu(W1 x + b1) + b2).
struct MlpParams {
  num::Tensor2 w1;  ///< hidden x inputs
  num::Vector b1;
  num::Tensor2 w2;  ///< classes x hidden
  num::Vector b2;

  static MlpParams zeros(std::size_t inputs, std::size_t hidden, std::size_t classes);
  /// Glorot-uniform weights, zero biases.
  static MlpParams glorot(std::size_t inputs, std::size_t hidden, std::size_t classes, std::uint64_t seed);

  std::size_t inputs() const noexcept { return w1.cols(); }
  std::size_t hidden() const noexcept { return w1.rows(); }
  std::size_t classes() const noexcept { return w2.rows(); }
  std::size_t parameter_count() const noexcept;

  /// Order: w1, b1, w2, b2.
  std::vector<double> flatten() const;
  void assign(std::span<const double> flat);

  friend bool operator==(const MlpParams&, const MlpParams&) = default;
};

num::Vector mlp_probabilities(const MlpParams& params, std::span<const double> x);

/// Adds the cross-entropy gradient of rows `batch` into `grads` (same shapes
/// as params) and returns the summed loss over those rows.
double mlp_accumulate_gradients(const MlpParams& params, const num::Tensor2& X, std::span<const std::size_t> y,
                                std::span<const std::size_t> batch, MlpParams& grads);

class MlpModel {
 public:
  MlpModel() = default;
  MlpModel(MlpParams params, MlpConfig config, std::vector<double> loss_history);

  const MlpParams& params() const noexcept { return params_; }
  const MlpConfig& config() const noexcept { return config_; }
  const std::vector<double>& loss_history() const noexcept { return loss_history_; }

  num::Vector probabilities(std::span<const double> x) const;
  std::size_t predict(std::span<const double> x) const;
  std::vector<std::size_t> predict(const num::Tensor2& X) const;

 private:
  MlpParams params_;
  MlpConfig config_;
  std::vector<double> loss_history_;
};

/// Minibatch Adam on mean cross-entropy. The last batch of an epoch may be short.
MlpModel mlp_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                 const MlpConfig& config = {});
std::size_t mlp_predict(const MlpModel& model, std::span<const double> x);

}  // namespace tbc::baselines
