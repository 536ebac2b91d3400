#include "tbc/experiments/controlled.hpp"

#include <tuple>

#include "tbc/error.hpp"

namespace tbc::experiments {

namespace {

constexpr ExperimentId kAllIds[] = {ExperimentId::table1,    ExperimentId::table2,     ExperimentId::table3,
                                    ExperimentId::fig2_size, ExperimentId::fig2_prune, ExperimentId::table4};

}  // namespace

std::string_view to_string(ExperimentId id) noexcept {
  switch (id) {
    case ExperimentId::table1: return "table1";
    case ExperimentId::table2: return "table2";
    case ExperimentId::table3: return "table3";
    case ExperimentId::fig2_size: return "fig2_size";
    case ExperimentId::fig2_prune: return "fig2_prune";
    case ExperimentId::table4: return "table4";
  }
  return "?";
}

ExperimentId parse_experiment_id(std::string_view name) {
  for (auto id : kAllIds) {
    if (name == to_string(id)) return id;
  }
  throw Error("unknown experiment '" + std::string(name) + "'");
}

synth::TaskKind task_for(ExperimentId id) {
  switch (id) {
    case ExperimentId::table1: return synth::TaskKind::string_equivalence;
    case ExperimentId::table2: return synth::TaskKind::substring_match;
    case ExperimentId::table3: return synth::TaskKind::odd_number;
    default: break;
  }
  throw Error("experiment '" + std::string(to_string(id)) + "' is not a controlled task");
}

synth::TaskSpec controlled_spec(const ControlledConfig& config) {
  auto spec = synth::TaskSpec::defaults(task_for(config.id), config.seed);
  spec.positive_probability = config.positive_probability;
  if (config.fast) {
    // Keep the train/test proportions of the full-size task.
    const double ratio = static_cast<double>(spec.test_rows) / static_cast<double>(spec.train_rows);
    spec.train_rows = kFastRows;
    spec.test_rows = static_cast<std::size_t>(static_cast<double>(kFastRows) * ratio + 0.5);
  }
  if (config.train_rows) spec.train_rows = *config.train_rows;
  if (config.test_rows) spec.test_rows = *config.test_rows;
  spec.validate();
  return spec;
}

ControlledResult run_controlled(const ControlledConfig& config) {
  ControlledResult result;
  result.config = config;
  result.spec = controlled_spec(config);
  std::tie(result.train, result.test) = synth::generate(result.spec);

  // Both labels always exist in the dictionary so that class indices, and the
  // positive index, do not depend on the realization.
  const std::vector<std::string> names{std::string(synth::kNegativeLabel), std::string(synth::kPositiveLabel)};
  result.classes = data::ClassDictionary(names);
  result.positive = result.classes.index_of(synth::kPositiveLabel);

  auto settings = config.settings;
  settings.tbc.seed = settings.forest.seed = settings.svm.seed = settings.mlp.seed = config.seed;
  if (config.fast) settings.tbc.epochs = kFastEpochs;
  if (config.epochs) settings.tbc.epochs = *config.epochs;

  for (auto kind : config.models) {
    auto model = make_classifier(kind, settings);
    ModelRun run;
    run.kind = kind;
    run.outcome = eval::evaluate_holdout(*model, result.train, result.test, result.classes, result.positive);
    if (const auto* tbc = dynamic_cast<const TbcClassifier*>(model.get())) {
      run.loss_history = tbc->model().loss_history();
    }
    if (const auto* dt = dynamic_cast<const TreeClassifier*>(model.get())) {
      run.tree_nodes = dt->tree().node_count();
      run.tree_depth = dt->tree().depth();
    }
    result.runs.push_back(std::move(run));
  }

  result.notes.push_back("precision and recall are reported for class \"1\"; the per-class table lists both classes");
  result.notes.push_back("DT, RF, SVM and MLP see one-hot encoded columns; TBC sees the serialized row text");
  if (config.fast) result.notes.push_back("fast mode: reduced rows and epochs, not comparable with full runs");
  return result;
}

}  // namespace tbc::experiments
