#include "tbc/experiments/public_datasets.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "tbc/data/csv.hpp"
#include "tbc/data/partition.hpp"
#include "tbc/error.hpp"
#include "tbc/experiments/controlled.hpp"

namespace tbc::experiments {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Seeded subsample that keeps the original row order.
data::Table shrink(const data::Table& table, std::size_t rows, std::uint64_t seed) {
  if (table.size() <= rows) return table;
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(rows);
  std::sort(order.begin(), order.end());
  return table.subset(order);
}

}  // namespace

std::size_t tbc_batch_for(std::string_view dataset_name) {
  const auto name = lowercase(dataset_name);
  return name == "iris" || name == "dress" ? 1 : 32;
}

std::optional<std::size_t> positive_class_for(const data::ClassDictionary& classes) {
  if (classes.size() == 2) return 1;
  return std::nullopt;
}

data::Table load_dataset(const DatasetSource& source) {
  if (!std::filesystem::exists(source.schema)) {
    throw FileError("schema file for dataset '" + source.name + "' not found", source.schema.string());
  }
  if (!std::filesystem::exists(source.csv)) {
    throw FileError("data file for dataset '" + source.name + "' not found", source.csv.string());
  }
  return data::load_csv(source.csv, data::load_schema(source.schema));
}

PublicResult run_public(const PublicConfig& config) {
  if (config.datasets.empty()) throw Error("no datasets given");
  if (config.folds < 2) throw Error("cross-validation needs at least two folds");

  std::vector<data::Table> tables;
  for (const auto& source : config.datasets) tables.push_back(load_dataset(source));

  PublicResult result;
  result.config = config;

  for (std::size_t d = 0; d < config.datasets.size(); ++d) {
    const auto& source = config.datasets[d];
    DatasetRun run;
    run.source = source;
    run.original_rows = tables[d].size();
    const auto table = config.fast ? shrink(tables[d], kFastRows, config.seed) : tables[d];
    run.rows = table.size();
    run.labels = table.labels();
    if (table.size() < config.folds) {
      throw Error("dataset '" + source.name + "' has fewer rows than folds");
    }
    run.classes = data::ClassDictionary::from_table(table);
    if (run.classes.size() < 2) throw Error("dataset '" + source.name + "' has a single class");
    run.positive = positive_class_for(run.classes);

    auto settings = config.settings;
    settings.tbc.seed = settings.forest.seed = settings.svm.seed = settings.mlp.seed = config.seed;
    settings.tbc.batch_size = tbc_batch_for(source.name);
    if (config.fast) settings.tbc.epochs = kFastEpochs;
    if (config.epochs) settings.tbc.epochs = *config.epochs;
    run.tbc_batch_size = settings.tbc.batch_size;

    const auto folds = data::make_folds(table, config.folds, config.seed);
    for (auto kind : config.models) {
      run.models.push_back(eval::cross_validate(classifier_factory(kind, settings), table, folds, run.classes,
                                                run.positive));
    }
    result.datasets.push_back(std::move(run));
  }

  result.notes.push_back("the SVM column is a linear one-vs-rest SVM trained with Pegasos; no kernel is used");
  result.notes.push_back("XGBoost is not included; the random forest covers the tree-ensemble role");
  result.notes.push_back("numeric columns reach RF, SVM and MLP unscaled, so wide-range columns dominate the linear and MLP models");
  result.notes.push_back("scores are unweighted means over folds; train rows average each fold's training split");
  result.notes.push_back("binary datasets report precision and recall of the lexicographically larger label; "
                         "multiclass datasets report micro averages");
  if (config.fast) result.notes.push_back("fast mode: datasets subsampled and TBC epochs reduced");
  return result;
}

}  // namespace tbc::experiments
