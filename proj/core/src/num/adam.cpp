#include "tbc/num/adam.hpp"

#include <cmath>

#include "tbc/error.hpp"

namespace tbc::num {

AdamState::AdamState(std::size_t parameters, AdamHyperparameters hyper)
    : hyper_(hyper), first_(parameters, 0.0), second_(parameters, 0.0) {
  if (!(hyper_.beta1 >= 0.0 && hyper_.beta1 < 1.0) || !(hyper_.beta2 >= 0.0 && hyper_.beta2 < 1.0)) {
    throw Error("Adam betas must lie in [0, 1)");
  }
  if (!(hyper_.learning_rate > 0.0) || !(hyper_.epsilon > 0.0)) {
    throw Error("Adam learning rate and epsilon must be positive");
  }
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.first_.size()) {
    throw Error("adam_step: parameter, gradient and state sizes differ");
  }
  const auto& h = state.hyper_;
  ++state.step_;
  const double t = static_cast<double>(state.step_);
  const double correction1 = 1.0 - std::pow(h.beta1, t);
  const double correction2 = 1.0 - std::pow(h.beta2, t);

  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    double& m = state.first_[i];
    double& v = state.second_[i];
    m = h.beta1 * m + (1.0 - h.beta1) * g;
    v = h.beta2 * v + (1.0 - h.beta2) * g * g;
    const double m_hat = m / correction1;
    const double v_hat = v / correction2;
    params[i] -= h.learning_rate * m_hat / (std::sqrt(v_hat) + h.epsilon);
  }
}

}  // namespace tbc::num
