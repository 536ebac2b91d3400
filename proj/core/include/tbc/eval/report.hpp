#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbc/eval/metrics.hpp"

namespace tbc::eval {

enum class Averaging { binary, micro };

std::string_view to_string(Averaging averaging) noexcept;

/// Scores of one model on one split.
///
/// Binary tasks report precision and recall of `positive`; multiclass tasks
/// report micro averages. `per_class` always carries the one-vs-rest scores
/// of every class so nothing depends on which class was called positive.
struct EvalReport {
  std::string model;
  std::string split;
  std::vector<std::string> class_names;
  ConfusionMatrix confusion;
  Averaging averaging = Averaging::binary;
  std::optional<std::size_t> positive;
  Metrics metrics;
  std::vector<Metrics> per_class;
  double train_seconds = 0.0;
  double inference_seconds = 0.0;
  std::vector<std::string> notes;
};

/// Builds a report from a confusion matrix. Two-class matrices use binary
/// metrics for `positive` (index 1 when empty); larger ones use micro averages.
EvalReport make_report(std::string model, std::string split, std::span<const std::string> class_names,
                       const ConfusionMatrix& cm, std::optional<std::size_t> positive = std::nullopt);

/// Aligned markdown table, one row per report: model, split, A, P, R and,
/// when `with_times` is set, train and inference seconds.
std::string markdown_table(std::span<const EvalReport> reports, bool with_times);

/// Per-class precision / recall table for a list of reports.
std::string markdown_class_table(std::span<const EvalReport> reports);

/// Fixed two-decimal rendering used by the markdown tables.
std::string format_score(double value);

}  // namespace tbc::eval
