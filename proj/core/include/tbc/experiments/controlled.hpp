#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbc/data/table.hpp"
#include "tbc/eval/cross_validation.hpp"
#include "tbc/experiments/classifiers.hpp"
#include "tbc/synth/tasks.hpp"

namespace tbc::experiments {

enum class ExperimentId { table1, table2, table3, fig2_size, fig2_prune, table4 };

std::string_view to_string(ExperimentId id) noexcept;
ExperimentId parse_experiment_id(std::string_view name);

/// Task behind table1 / table2 / table3. Throws tbc::Error for other ids.
synth::TaskKind task_for(ExperimentId id);

/// Row count and epoch budget of --fast runs.
inline constexpr std::size_t kFastRows = 200;
inline constexpr std::size_t kFastEpochs = 5;

struct ControlledConfig {
  ExperimentId id = ExperimentId::table1;
  std::uint64_t seed = 0;
  bool fast = false;
  std::vector<ModelKind> models{ModelKind::tbc, ModelKind::dt, ModelKind::svm};
  std::optional<std::size_t> train_rows;
  std::optional<std::size_t> test_rows;
  std::optional<std::size_t> epochs;
  double positive_probability = 0.5;
  /// Model hyperparameters; every model seed is replaced by `seed`.
  ModelSettings settings;
};

struct ModelRun {
  ModelKind kind = ModelKind::tbc;
  eval::HoldoutOutcome outcome;
  /// TBC only: mean training loss per epoch.
  std::vector<double> loss_history;
  /// DT only: fitted tree size.
  std::size_t tree_nodes = 0;
  std::size_t tree_depth = 0;
};

struct ControlledResult {
  ControlledConfig config;
  synth::TaskSpec spec;
  data::Table train;
  data::Table test;
  data::ClassDictionary classes;
  std::size_t positive = 1;
  std::vector<ModelRun> runs;
  std::vector<std::string> notes;
};

/// Task spec after applying --fast and row overrides.
synth::TaskSpec controlled_spec(const ControlledConfig& config);

/// Generates the task, then trains and scores each requested model on the
/// same train/test tables. Models run in the order given.
ControlledResult run_controlled(const ControlledConfig& config);

}  // namespace tbc::experiments
