#include "tbc/baselines/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tbc/baselines/tree.hpp"
#include "tbc/error.hpp"
#include "tbc/num/adam.hpp"
#include "tbc/num/functions.hpp"

namespace tbc::baselines {

void MlpConfig::validate() const {
  if (epochs == 0) throw Error("MLP needs at least one epoch");
  if (batch_size == 0) throw Error("MLP batch size must be positive");
  if (!(learning_rate > 0.0)) throw Error("MLP learning rate must be positive");
}

MlpParams MlpParams::zeros(std::size_t inputs, std::size_t hidden, std::size_t classes) {
  return {num::Tensor2(hidden, inputs), num::Vector(hidden, 0.0), num::Tensor2(classes, hidden),
          num::Vector(classes, 0.0)};
}

MlpParams MlpParams::glorot(std::size_t inputs, std::size_t hidden, std::size_t classes, std::uint64_t seed) {
  auto p = zeros(inputs, hidden, classes);
  std::mt19937_64 rng(seed);
  auto fill = [&rng](num::Tensor2& w) {
    const double limit = std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
    std::uniform_real_distribution<double> dist(-limit, limit);
    for (auto& v : w.data()) v = dist(rng);
  };
  fill(p.w1);
  fill(p.w2);
  return p;
}

std::size_t MlpParams::parameter_count() const noexcept { return w1.size() + b1.size() + w2.size() + b2.size(); }

std::vector<double> MlpParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  flat.insert(flat.end(), w1.data().begin(), w1.data().end());
  flat.insert(flat.end(), b1.begin(), b1.end());
  flat.insert(flat.end(), w2.data().begin(), w2.data().end());
  flat.insert(flat.end(), b2.begin(), b2.end());
  return flat;
}

void MlpParams::assign(std::span<const double> flat) {
  if (flat.size() != parameter_count()) throw Error("MLP parameter vector has the wrong length");
  auto it = flat.begin();
  auto take = [&it](std::span<double> dst) {
    std::copy_n(it, dst.size(), dst.begin());
    it += static_cast<std::ptrdiff_t>(dst.size());
  };
  take(w1.data());
  take(b1);
  take(w2.data());
  take(b2);
}

namespace {

// Hidden pre-activation; zero inputs are skipped because one-hot rows are mostly zero.
void hidden_layer(const MlpParams& p, std::span<const double> x, num::Vector& hidden) {
  hidden.assign(p.b1.begin(), p.b1.end());
  const auto h = p.hidden();
  const auto d = p.inputs();
  for (std::size_t j = 0; j < d; ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    for (std::size_t r = 0; r < h; ++r) hidden[r] += p.w1(r, j) * xj;
  }
  for (auto& v : hidden) v = std::max(v, 0.0);
}

}  // namespace

num::Vector mlp_probabilities(const MlpParams& params, std::span<const double> x) {
  if (x.size() != params.inputs()) throw Error("MLP input has the wrong width");
  num::Vector hidden;
  hidden_layer(params, x, hidden);
  auto logits = num::affine(hidden, params.w2, params.b2);
  num::softmax_inplace(logits);
  return logits;
}

double mlp_accumulate_gradients(const MlpParams& params, const num::Tensor2& X, std::span<const std::size_t> y,
                                std::span<const std::size_t> batch, MlpParams& grads) {
  const auto h = params.hidden();
  const auto d = params.inputs();
  const auto k = params.classes();
  num::Vector hidden;
  num::Vector dhidden(h);
  double loss = 0.0;

  for (auto i : batch) {
    const auto x = X.row(i);
    hidden_layer(params, x, hidden);
    auto probs = num::affine(hidden, params.w2, params.b2);
    num::softmax_inplace(probs);
    loss += num::cross_entropy(probs, y[i]);
    if (probs[y[i]] < num::kProbabilityFloor) continue;

    auto& dlogits = probs;
    dlogits[y[i]] -= 1.0;
    num::outer_accumulate(grads.w2, dlogits, hidden);
    for (std::size_t c = 0; c < k; ++c) grads.b2[c] += dlogits[c];

    std::fill(dhidden.begin(), dhidden.end(), 0.0);
    num::gemv_transpose_accumulate(params.w2, dlogits, dhidden);
    for (std::size_t r = 0; r < h; ++r) {
      if (hidden[r] <= 0.0) dhidden[r] = 0.0;
      grads.b1[r] += dhidden[r];
    }
    for (std::size_t j = 0; j < d; ++j) {
      const double xj = x[j];
      if (xj == 0.0) continue;
      for (std::size_t r = 0; r < h; ++r) grads.w1(r, j) += dhidden[r] * xj;
    }
  }
  return loss;
}

MlpModel::MlpModel(MlpParams params, MlpConfig config, std::vector<double> loss_history)
    : params_(std::move(params)), config_(config), loss_history_(std::move(loss_history)) {}

num::Vector MlpModel::probabilities(std::span<const double> x) const { return mlp_probabilities(params_, x); }

std::size_t MlpModel::predict(std::span<const double> x) const { return num::argmax(probabilities(x)); }

std::vector<std::size_t> MlpModel::predict(const num::Tensor2& X) const {
  std::vector<std::size_t> out(X.rows());
  for (std::size_t r = 0; r < X.rows(); ++r) out[r] = predict(X.row(r));
  return out;
}

MlpModel mlp_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                 const MlpConfig& config) {
  config.validate();
  detail::check_training_data(X, y, classes);
  const auto n = X.rows();
  const auto hidden = config.hidden ? config.hidden : 2 * X.cols();

  auto params = MlpParams::glorot(X.cols(), hidden, classes, config.seed);
  auto grads = MlpParams::zeros(X.cols(), hidden, classes);
  num::AdamState adam(params.parameter_count(), {.learning_rate = config.learning_rate});
  auto flat = params.flatten();

  std::mt19937_64 rng(config.seed ^ 0x9E3779B97F4A7C15ull);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> history;

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double total = 0.0;
    for (std::size_t start = 0; start < n; start += config.batch_size) {
      const auto stop = std::min(n, start + config.batch_size);
      const std::span<const std::size_t> batch(order.data() + start, stop - start);
      grads = MlpParams::zeros(X.cols(), hidden, classes);
      total += mlp_accumulate_gradients(params, X, y, batch, grads);
      auto g = grads.flatten();
      const double inv = 1.0 / static_cast<double>(batch.size());
      for (auto& v : g) v *= inv;
      num::adam_step(flat, g, adam);
      params.assign(flat);
    }
    history.push_back(total / static_cast<double>(n));
  }
  return MlpModel(std::move(params), config, std::move(history));
}

std::size_t mlp_predict(const MlpModel& model, std::span<const double> x) { return model.predict(x); }

}  // namespace tbc::baselines
