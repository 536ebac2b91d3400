#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbc/data/table.hpp"
#include "tbc/eval/cross_validation.hpp"
#include "tbc/experiments/classifiers.hpp"

namespace tbc::experiments {

struct DatasetSource {
  std::string name;
  std::filesystem::path csv;
  std::filesystem::path schema;
};

struct PublicConfig {
  std::vector<DatasetSource> datasets;
  std::uint64_t seed = 0;
  bool fast = false;
  std::vector<ModelKind> models{ModelKind::tbc, ModelKind::rf, ModelKind::svm, ModelKind::mlp};
  std::size_t folds = 5;
  std::optional<std::size_t> epochs;
  ModelSettings settings;
};

struct DatasetRun {
  DatasetSource source;
  std::size_t rows = 0;
  std::size_t original_rows = 0;
  /// Labels of the rows that were cross-validated, in row order.
  std::vector<std::string> labels;
  data::ClassDictionary classes;
  std::optional<std::size_t> positive;
  std::size_t tbc_batch_size = 0;
  std::vector<eval::CrossValidationResult> models;
};

struct PublicResult {
  PublicConfig config;
  std::vector<DatasetRun> datasets;
  std::vector<std::string> notes;
};

/// TBC batch size for a dataset: 1 for the small Iris and Dress sets, 32 otherwise.
std::size_t tbc_batch_for(std::string_view dataset_name);

/// Positive class of a binary dataset: the lexicographically larger label
/// (index 1). Empty for multiclass data.
std::optional<std::size_t> positive_class_for(const data::ClassDictionary& classes);

/// Loads one dataset; errors name the offending path.
data::Table load_dataset(const DatasetSource& source);

/// Loads every dataset up front, then runs k-fold cross-validation of each
/// model on each dataset with one fold plan per dataset.
PublicResult run_public(const PublicConfig& config);

}  // namespace tbc::experiments
