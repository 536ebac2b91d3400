#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tbc::num {

struct AdamHyperparameters {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Moment accumulators for a flat parameter vector.
class AdamState {
 public:
  explicit AdamState(std::size_t parameters, AdamHyperparameters hyper = {});

  const AdamHyperparameters& hyperparameters() const noexcept { return hyper_; }
  std::uint64_t step() const noexcept { return step_; }
  std::size_t size() const noexcept { return first_.size(); }
  std::span<const double> first_moment() const noexcept { return first_; }
  std::span<const double> second_moment() const noexcept { return second_; }

 private:
  friend void adam_step(std::span<double>, std::span<const double>, AdamState&);

  AdamHyperparameters hyper_;
  std::vector<double> first_;
  std::vector<double> second_;
  std::uint64_t step_ = 0;
};

/// Bias-corrected Adam update applied in place:
///   m = b1 m + (1-b1) g,  v = b2 v + (1-b2) g^2,
///   p -= lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps).
/// Throws tbc::Error when params, grads and state differ in length.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

}  // namespace tbc::num
