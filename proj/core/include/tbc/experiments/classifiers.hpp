#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tbc/baselines/forest.hpp"
#include "tbc/baselines/mlp.hpp"
#include "tbc/baselines/svm.hpp"
#include "tbc/baselines/tree.hpp"
#include "tbc/data/one_hot.hpp"
#include "tbc/eval/cross_validation.hpp"
#include "tbc/lstm/model.hpp"

namespace tbc::experiments {

enum class ModelKind { tbc, dt, rf, svm, mlp };

std::string_view to_string(ModelKind kind) noexcept;
/// Accepts "tbc", "dt", "rf", "svm", "mlp" (case-insensitive).
ModelKind parse_model_kind(std::string_view name);
/// Comma-separated list, e.g. "tbc,dt,svm". Duplicates are rejected.
std::vector<ModelKind> parse_model_list(std::string_view list);

struct ModelSettings {
  lstm::TrainConfig tbc;
  baselines::TreeConfig tree;
  baselines::ForestConfig forest;
  baselines::SvmConfig svm;
  baselines::MlpConfig mlp;
};

/// Serializes rows to text and trains the character LSTM on them.
class TbcClassifier final : public eval::Classifier {
 public:
  explicit TbcClassifier(lstm::TrainConfig config) : config_(config) {}

  std::string name() const override { return "TBC"; }
  void fit(const data::Table& train, const data::ClassDictionary& classes) override;
  std::vector<std::size_t> predict(const data::Table& table) const override;

  const lstm::TbcModel& model() const noexcept { return model_; }

 private:
  lstm::TrainConfig config_;
  lstm::TbcModel model_;
};

/// Shared plumbing for the models that consume a one-hot design matrix.
class EncodedClassifier : public eval::Classifier {
 public:
  void fit(const data::Table& train, const data::ClassDictionary& classes) final;
  std::vector<std::size_t> predict(const data::Table& table) const final;

  const data::OneHotEncoder& encoder() const noexcept { return encoder_; }

 protected:
  virtual void fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) = 0;
  virtual std::vector<std::size_t> predict_matrix(const num::Tensor2& X) const = 0;

 private:
  data::OneHotEncoder encoder_;
};

class TreeClassifier final : public EncodedClassifier {
 public:
  explicit TreeClassifier(baselines::TreeConfig config) : config_(config) {}
  std::string name() const override { return "DT"; }
  const baselines::DecisionTree& tree() const noexcept { return tree_; }

 private:
  void fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) override;
  std::vector<std::size_t> predict_matrix(const num::Tensor2& X) const override;

  baselines::TreeConfig config_;
  baselines::DecisionTree tree_;
};

class ForestClassifier final : public EncodedClassifier {
 public:
  explicit ForestClassifier(baselines::ForestConfig config) : config_(config) {}
  std::string name() const override { return "RF"; }
  const baselines::RandomForest& forest() const noexcept { return forest_; }

 private:
  void fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) override;
  std::vector<std::size_t> predict_matrix(const num::Tensor2& X) const override;

  baselines::ForestConfig config_;
  baselines::RandomForest forest_;
};

class SvmClassifier final : public EncodedClassifier {
 public:
  explicit SvmClassifier(baselines::SvmConfig config) : config_(config) {}
  std::string name() const override { return "SVM"; }
  std::vector<std::string> notes() const override;

 private:
  void fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) override;
  std::vector<std::size_t> predict_matrix(const num::Tensor2& X) const override;

  baselines::SvmConfig config_;
  baselines::SvmModel model_;
};

class MlpClassifier final : public EncodedClassifier {
 public:
  explicit MlpClassifier(baselines::MlpConfig config) : config_(config) {}
  std::string name() const override { return "MLP"; }

 private:
  void fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) override;
  std::vector<std::size_t> predict_matrix(const num::Tensor2& X) const override;

  baselines::MlpConfig config_;
  baselines::MlpModel model_;
};

std::unique_ptr<eval::Classifier> make_classifier(ModelKind kind, const ModelSettings& settings);
eval::ClassifierFactory classifier_factory(ModelKind kind, ModelSettings settings);

}  // namespace tbc::experiments
