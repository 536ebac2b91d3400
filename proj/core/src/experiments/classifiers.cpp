#include "tbc/experiments/classifiers.hpp"

#include <algorithm>
#include <cctype>

#include "tbc/error.hpp"
#include "tbc/text/serializer.hpp"

namespace tbc::experiments {

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::tbc: return "tbc";
    case ModelKind::dt: return "dt";
    case ModelKind::rf: return "rf";
    case ModelKind::svm: return "svm";
    case ModelKind::mlp: return "mlp";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto k : {ModelKind::tbc, ModelKind::dt, ModelKind::rf, ModelKind::svm, ModelKind::mlp}) {
    if (lower == to_string(k)) return k;
  }
  throw Error("unknown model '" + std::string(name) + "' (expected tbc, dt, rf, svm or mlp)");
}

std::vector<ModelKind> parse_model_list(std::string_view list) {
  std::vector<ModelKind> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    auto item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto kind = parse_model_kind(item);
      if (std::find(out.begin(), out.end(), kind) != out.end()) {
        throw Error("model '" + std::string(item) + "' listed twice");
      }
      out.push_back(kind);
    }
    start = end + 1;
  }
  if (out.empty()) throw Error("empty model list");
  return out;
}

void TbcClassifier::fit(const data::Table& train, const data::ClassDictionary& classes) {
  const auto instances = text::serialize_table(train, classes);
  model_ = lstm::train(instances, classes, config_);
}

std::vector<std::size_t> TbcClassifier::predict(const data::Table& table) const {
  std::vector<std::size_t> out;
  out.reserve(table.size());
  for (const auto& row : table.rows()) out.push_back(lstm::predict_index(model_, row));
  return out;
}

void EncodedClassifier::fit(const data::Table& train, const data::ClassDictionary& classes) {
  encoder_ = data::OneHotEncoder::fit(train);
  fit_matrix(encoder_.transform(train), classes.encode(train.labels()), classes.size());
}

std::vector<std::size_t> EncodedClassifier::predict(const data::Table& table) const {
  return predict_matrix(encoder_.transform(table));
}

void TreeClassifier::fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) {
  tree_ = baselines::dt_fit(X, y, classes, config_);
}

std::vector<std::size_t> TreeClassifier::predict_matrix(const num::Tensor2& X) const { return tree_.predict(X); }

void ForestClassifier::fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) {
  forest_ = baselines::rf_fit(X, y, classes, config_);
}

std::vector<std::size_t> ForestClassifier::predict_matrix(const num::Tensor2& X) const {
  return forest_.predict(X);
}

std::vector<std::string> SvmClassifier::notes() const {
  return {"linear one-vs-rest SVM trained with Pegasos; not an RBF-kernel SVM"};
}

void SvmClassifier::fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) {
  model_ = baselines::svm_fit(X, y, classes, config_);
}

std::vector<std::size_t> SvmClassifier::predict_matrix(const num::Tensor2& X) const { return model_.predict(X); }

void MlpClassifier::fit_matrix(const num::Tensor2& X, const std::vector<std::size_t>& y, std::size_t classes) {
  model_ = baselines::mlp_fit(X, y, classes, config_);
}

std::vector<std::size_t> MlpClassifier::predict_matrix(const num::Tensor2& X) const { return model_.predict(X); }

std::unique_ptr<eval::Classifier> make_classifier(ModelKind kind, const ModelSettings& settings) {
  switch (kind) {
    case ModelKind::tbc: return std::make_unique<TbcClassifier>(settings.tbc);
    case ModelKind::dt: return std::make_unique<TreeClassifier>(settings.tree);
    case ModelKind::rf: return std::make_unique<ForestClassifier>(settings.forest);
    case ModelKind::svm: return std::make_unique<SvmClassifier>(settings.svm);
    case ModelKind::mlp: return std::make_unique<MlpClassifier>(settings.mlp);
  }
  throw Error("unknown model kind");
}

eval::ClassifierFactory classifier_factory(ModelKind kind, ModelSettings settings) {
  return [kind, settings = std::move(settings)] { return make_classifier(kind, settings); };
}

}  // namespace tbc::experiments
