#include "tbc/num/functions.hpp"

#include <algorithm>
#include <cmath>

#include "tbc/error.hpp"

namespace tbc::num {

double sigmoid(double x) noexcept {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Vector sigmoid(std::span<const double> x) {
  Vector out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [](double v) { return sigmoid(v); });
  return out;
}

Vector tanh(std::span<const double> x) {
  Vector out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [](double v) { return std::tanh(v); });
  return out;
}

void softmax_inplace(std::span<double> logits) noexcept {
  if (logits.empty()) return;
  const double peak = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (auto& v : logits) {
    v = std::exp(v - peak);
    total += v;
  }
  for (auto& v : logits) v /= total;
}

Vector softmax(std::span<const double> logits) {
  Vector out(logits.begin(), logits.end());
  softmax_inplace(out);
  return out;
}

double cross_entropy(std::span<const double> probabilities, std::size_t target) {
  if (target >= probabilities.size()) {
    throw Error("cross_entropy: target " + std::to_string(target) + " out of range for " +
                std::to_string(probabilities.size()) + " classes");
  }
  return -std::log(std::max(probabilities[target], kProbabilityFloor));
}

std::size_t argmax(std::span<const double> values) {
  if (values.empty()) throw Error("argmax of an empty vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace tbc::num
