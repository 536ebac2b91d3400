#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tbc/data/table.hpp"
#include "tbc/lstm/params.hpp"
#include "tbc/text/serializer.hpp"

namespace tbc::lstm {

struct TrainConfig {
  std::size_t epochs = 20;
  std::size_t batch_size = 1;
  double learning_rate = 1e-3;
  std::uint64_t seed = 0;
  bool shuffle = true;
  std::size_t hidden_size = kDefaultHiddenSize;
  /// Weights start i.i.d. U(-init_scale, init_scale).
  double init_scale = 0.15;
  /// Added to the forget-gate bias after uniform initialisation.
  double forget_bias = 1.0;
  /// Global gradient-norm clip applied to each batch mean; 0 disables it.
  double clip_norm = 0.0;

  /// Throws tbc::Error when epochs or batch_size is zero, or a rate is not positive.
  void validate() const;
};

/// A trained text-based classifier: LSTM weights, class names, and the mean
/// training loss of every completed epoch.
class TbcModel {
 public:
  TbcModel() = default;
  TbcModel(LstmParams params, data::ClassDictionary classes, TrainConfig config,
           std::vector<double> loss_history);

  const LstmParams& params() const noexcept { return params_; }
  const data::ClassDictionary& classes() const noexcept { return classes_; }
  const TrainConfig& config() const noexcept { return config_; }
  const std::vector<double>& loss_history() const noexcept { return loss_history_; }
  bool trained() const noexcept { return classes_.size() > 0 && params_.num_classes() > 0; }

  std::vector<double> probabilities(const text::OneHotSequence& sequence) const;
  /// Argmax class index; ties go to the lower index.
  std::size_t predict_index(const text::OneHotSequence& sequence) const;

 private:
  LstmParams params_;
  data::ClassDictionary classes_;
  TrainConfig config_;
  std::vector<double> loss_history_;
};

/// Called after every epoch with (epoch index, mean epoch loss).
using EpochCallback = std::function<void(std::size_t, double)>;

/// Trains from U(-init_scale, init_scale) weights seeded by config.seed, with
/// forget_bias added to the forget gate. Each
/// epoch shuffles (seeded), averages gradients over each batch, and applies
/// one Adam step per batch. Throws tbc::Error for an empty training set or a
/// class index outside `classes`.
TbcModel train(std::span<const text::SerializedInstance> instances, const data::ClassDictionary& classes,
               const TrainConfig& config, const EpochCallback& on_epoch = {});

/// Serializes, encodes and classifies one row; returns the class name.
/// Throws tbc::Error for an untrained model.
std::string predict(const TbcModel& model, std::span<const data::FeatureValue> row);
std::size_t predict_index(const TbcModel& model, std::span<const data::FeatureValue> row);

/// JSON model file with shapes, parameters, classes and a config echo.
/// Doubles are written in shortest round-trip form, so reloading is exact.
std::string model_to_json(const TbcModel& model);
TbcModel model_from_json(const std::string& json);
void save_model(const TbcModel& model, const std::filesystem::path& path);
TbcModel load_model(const std::filesystem::path& path);

}  // namespace tbc::lstm
