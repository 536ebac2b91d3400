#include "tbc/lstm/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tbc/error.hpp"
#include "tbc/lstm/network.hpp"
#include "tbc/num/adam.hpp"
#include "tbc/num/functions.hpp"

namespace tbc::lstm {

void TrainConfig::validate() const {
  if (epochs == 0) throw Error("epochs must be at least 1");
  if (batch_size == 0) throw Error("batch size must be at least 1");
  if (hidden_size == 0) throw Error("hidden size must be at least 1");
  if (!(learning_rate > 0.0)) throw Error("learning rate must be positive");
  if (!(init_scale >= 0.0)) throw Error("init scale must be non-negative");
  if (!(clip_norm >= 0.0)) throw Error("clip norm must be non-negative");
}

TbcModel::TbcModel(LstmParams params, data::ClassDictionary classes, TrainConfig config,
                   std::vector<double> loss_history)
    : params_(std::move(params)),
      classes_(std::move(classes)),
      config_(config),
      loss_history_(std::move(loss_history)) {
  if (params_.num_classes() != classes_.size()) {
    throw Error("model head width does not match the class dictionary");
  }
}

std::vector<double> TbcModel::probabilities(const text::OneHotSequence& sequence) const {
  if (!trained()) throw Error("model is not trained");
  return forward(sequence, params_);
}

std::size_t TbcModel::predict_index(const text::OneHotSequence& sequence) const {
  return num::argmax(probabilities(sequence));
}

TbcModel train(std::span<const text::SerializedInstance> instances, const data::ClassDictionary& classes,
               const TrainConfig& config, const EpochCallback& on_epoch) {
  config.validate();
  if (instances.empty()) throw Error("cannot train on an empty training set");
  if (classes.size() == 0) throw Error("class dictionary is empty");

  std::vector<text::OneHotSequence> sequences;
  std::vector<std::size_t> targets;
  sequences.reserve(instances.size());
  targets.reserve(instances.size());
  for (const auto& inst : instances) {
    if (inst.class_index >= classes.size()) {
      throw Error("class index " + std::to_string(inst.class_index) + " outside the class dictionary");
    }
    sequences.push_back(text::encode_chars(inst.text));
    if (sequences.back().length() == 0) throw Error("training instance has an empty string");
    targets.push_back(inst.class_index);
  }

  auto params = LstmParams::uniform(config.hidden_size, classes.size(), config.seed, config.init_scale);
  for (auto& b : params.gate(Gate::forget).bias) b += config.forget_bias;
  auto grads = LstmParams::zeros(config.hidden_size, classes.size());
  num::AdamState adam(params.parameter_count(), {.learning_rate = config.learning_rate});

  // Shuffling draws from its own stream so it does not depend on initialisation.
  std::mt19937_64 shuffle_rng(config.seed ^ 0x9E3779B97F4A7C15ULL);
  std::vector<std::size_t> order(instances.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::vector<double> flat_params;
  std::vector<double> flat_grads;
  std::vector<double> history;
  history.reserve(config.epochs);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle) std::shuffle(order.begin(), order.end(), shuffle_rng);
    double epoch_loss = 0.0;
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size) {
      const auto end = std::min(order.size(), begin + config.batch_size);
      grads.for_each_buffer([](std::span<double> b) { std::fill(b.begin(), b.end(), 0.0); });
      for (std::size_t k = begin; k < end; ++k) {
        epoch_loss += accumulate_gradients(sequences[order[k]], targets[order[k]], params, grads);
      }

      flat_grads = grads.flatten();
      const double scale = 1.0 / static_cast<double>(end - begin);
      double norm_sq = 0.0;
      for (auto& g : flat_grads) {
        g *= scale;
        norm_sq += g * g;
      }
      if (config.clip_norm > 0.0 && norm_sq > config.clip_norm * config.clip_norm) {
        const double shrink = config.clip_norm / std::sqrt(norm_sq);
        for (auto& g : flat_grads) g *= shrink;
      }

      flat_params = params.flatten();
      num::adam_step(flat_params, flat_grads, adam);
      params.assign(flat_params);
    }
    epoch_loss /= static_cast<double>(order.size());
    history.push_back(epoch_loss);
    if (on_epoch) on_epoch(epoch, epoch_loss);
  }

  return TbcModel(std::move(params), classes, config, std::move(history));
}

std::size_t predict_index(const TbcModel& model, std::span<const data::FeatureValue> row) {
  if (!model.trained()) throw Error("model is not trained");
  const auto inst = text::serialize_instance(row, 0);
  return model.predict_index(text::encode_chars(inst.text));
}

std::string predict(const TbcModel& model, std::span<const data::FeatureValue> row) {
  return model.classes().name(predict_index(model, row));
}

}  // namespace tbc::lstm
