#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tbc/data/partition.hpp"
#include "tbc/data/table.hpp"
#include "tbc/eval/report.hpp"

namespace tbc::eval {

/// Anything that learns from a labelled table and predicts class indices.
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual std::string name() const = 0;
  virtual void fit(const data::Table& train, const data::ClassDictionary& classes) = 0;
  virtual std::vector<std::size_t> predict(const data::Table& table) const = 0;
  /// Caveats worth printing next to this model's scores.
  virtual std::vector<std::string> notes() const { return {}; }
};

using ClassifierFactory = std::function<std::unique_ptr<Classifier>()>;

/// Fit on one table, score on itself and on a held-out table.
struct HoldoutOutcome {
  EvalReport train;
  EvalReport test;
  std::vector<std::size_t> train_predictions;
  std::vector<std::size_t> test_predictions;
};

HoldoutOutcome evaluate_holdout(Classifier& model, const data::Table& train, const data::Table& test,
                                const data::ClassDictionary& classes,
                                std::optional<std::size_t> positive = std::nullopt);

struct FoldOutcome {
  std::size_t fold = 0;
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  HoldoutOutcome outcome;
};

/// Per-fold results plus train and test summaries whose metrics are the
/// unweighted means over folds. Summary confusion matrices are summed and
/// summary times are per-fold means.
struct CrossValidationResult {
  std::string model;
  std::vector<FoldOutcome> folds;
  EvalReport train;
  EvalReport test;
};

/// Throws tbc::Error when the plan does not cover exactly the table's rows.
CrossValidationResult cross_validate(const ClassifierFactory& factory, const data::Table& table,
                                     const data::FoldPlan& folds, const data::ClassDictionary& classes,
                                     std::optional<std::size_t> positive = std::nullopt);

/// Unweighted mean of reports for the same model and split.
EvalReport mean_report(std::span<const EvalReport> reports);

}  // namespace tbc::eval
