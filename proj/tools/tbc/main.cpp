// Command-line front end: one subcommand per experiment plus a few data
// utilities (serialize, generate, train, predict).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tbc/data/csv.hpp"
#include "tbc/error.hpp"
#include "tbc/experiments/controlled.hpp"
#include "tbc/experiments/output.hpp"
#include "tbc/experiments/public_datasets.hpp"
#include "tbc/experiments/tree_analysis.hpp"
#include "tbc/lstm/model.hpp"
#include "tbc/synth/tasks.hpp"
#include "tbc/text/serializer.hpp"

namespace fs = std::filesystem;
using namespace tbc;

namespace {

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string out;
  bool fast = false;
  std::string models;
  std::optional<double> init_scale;
  std::optional<double> forget_bias;
  std::optional<double> learning_rate;

  void apply(experiments::ModelSettings& settings) const {
    if (init_scale) settings.tbc.init_scale = *init_scale;
    if (forget_bias) settings.tbc.forget_bias = *forget_bias;
    if (learning_rate) settings.tbc.learning_rate = *learning_rate;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_models) {
  cmd->add_option("--seed", opts.seed, "Random seed for data generation, splits and model initialisation");
  cmd->add_option("--out", opts.out, "Output directory (default: results/<experiment>)");
  cmd->add_flag("--fast", opts.fast, "Shrink to 200 rows and 5 TBC epochs for smoke runs");
  if (!with_models) return;
  cmd->add_option("--models", opts.models, "Comma-separated subset of tbc,dt,rf,svm,mlp");
  cmd->add_option("--tbc-init-scale", opts.init_scale, "TBC weights start U(-s, s)");
  cmd->add_option("--tbc-forget-bias", opts.forget_bias, "Added to the TBC forget-gate bias at initialisation");
  cmd->add_option("--tbc-learning-rate", opts.learning_rate, "TBC Adam step size");
}

fs::path output_dir(const CommonOptions& opts, experiments::ExperimentId id) {
  return opts.out.empty() ? fs::path("results") / std::string(experiments::to_string(id)) : fs::path(opts.out);
}

void print_written(const std::vector<fs::path>& files) {
  for (const auto& f : files) std::cerr << "wrote " << f.string() << '\n';
}

// Parses repeated NAME=PATH arguments.
std::map<std::string, std::string> parse_assignments(const std::vector<std::string>& items, const char* flag) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(std::string(flag) + " expects NAME=PATH, got '" + item + "'");
    }
    if (!out.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
      throw Error(std::string(flag) + " given twice for '" + item.substr(0, eq) + "'");
    }
  }
  return out;
}

data::Table load_table(const std::string& csv, const std::string& schema) {
  return data::load_csv(csv, data::load_schema(schema));
}

int run_controlled(experiments::ExperimentId id, const CommonOptions& opts, std::optional<std::size_t> train_rows,
                   std::optional<std::size_t> test_rows, std::optional<std::size_t> epochs) {
  experiments::ControlledConfig config;
  config.id = id;
  config.seed = opts.seed;
  config.fast = opts.fast;
  if (!opts.models.empty()) config.models = experiments::parse_model_list(opts.models);
  config.train_rows = train_rows;
  config.test_rows = test_rows;
  config.epochs = epochs;
  opts.apply(config.settings);

  const auto result = experiments::run_controlled(config);
  const auto dir = output_dir(opts, id);
  print_written(experiments::write_controlled(result, dir));
  std::cout << experiments::controlled_report_markdown(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Text-based classification of tabular data with a character LSTM"};
  app.set_version_flag("--version", experiments::library_version());
  app.require_subcommand(1);

  // table1 / table2 / table3
  CommonOptions controlled_opts;
  std::optional<std::size_t> train_rows;
  std::optional<std::size_t> test_rows;
  std::optional<std::size_t> epochs;
  std::map<std::string, experiments::ExperimentId> controlled_ids{
      {"table1", experiments::ExperimentId::table1},
      {"table2", experiments::ExperimentId::table2},
      {"table3", experiments::ExperimentId::table3}};
  const std::map<std::string, std::string> controlled_help{
      {"table1", "String equivalence: is the second word a copy of the first?"},
      {"table2", "Substring matching: does one word contain the other?"},
      {"table3", "Odd numbers: is the integer part of the value odd?"}};
  std::map<std::string, CLI::App*> controlled_cmds;
  for (const auto& [name, id] : controlled_ids) {
    auto* cmd = app.add_subcommand(name, controlled_help.at(name));
    add_common(cmd, controlled_opts, true);
    cmd->add_option("--train-rows", train_rows, "Override the training row count");
    cmd->add_option("--test-rows", test_rows, "Override the test row count");
    cmd->add_option("--epochs", epochs, "Override the TBC epoch count");
    controlled_cmds[name] = cmd;
  }

  // fig2_size
  CommonOptions size_opts;
  std::vector<std::size_t> combinations;
  std::size_t rows_per_combination = 1;
  auto* size_cmd = app.add_subcommand("fig2_size", "Unpruned tree size against the number of distinct value pairs");
  add_common(size_cmd, size_opts, false);
  size_cmd->add_option("--combinations", combinations, "Grid of distinct-pair counts (default 100..1000 by 100)")
      ->delimiter(',');
  size_cmd->add_option("--rows-per-combination", rows_per_combination, "Copies of each distinct pair");

  // fig2_prune
  CommonOptions prune_opts;
  std::optional<std::size_t> prune_rows;
  std::vector<std::string> depth_grid;
  auto* prune_cmd = app.add_subcommand("fig2_prune", "Training accuracy of depth-capped trees on string equivalence");
  add_common(prune_cmd, prune_opts, false);
  prune_cmd->add_option("--train-rows", prune_rows, "Override the training row count");
  prune_cmd->add_option("--depths", depth_grid, "Depth grid; 'inf' means unlimited")->delimiter(',');

  // table4
  CommonOptions public_opts;
  std::vector<std::string> dataset_args;
  std::vector<std::string> schema_args;
  std::string schema_dir = "data/schemas";
  std::size_t folds = 5;
  std::optional<std::size_t> public_epochs;
  auto* public_cmd = app.add_subcommand("table4", "Cross-validated comparison on local public datasets");
  add_common(public_cmd, public_opts, true);
  public_cmd->add_option("--dataset", dataset_args, "Dataset as NAME=CSV_PATH (repeatable)")->required();
  public_cmd->add_option("--schema", schema_args, "Schema sidecar as NAME=PATH (default <schema-dir>/NAME.schema)");
  public_cmd->add_option("--schema-dir", schema_dir, "Directory searched for NAME.schema files");
  public_cmd->add_option("--folds", folds, "Cross-validation folds");
  public_cmd->add_option("--epochs", public_epochs, "Override the TBC epoch count");

  // serialize
  std::string serialize_input;
  std::string serialize_schema;
  auto* serialize_cmd =
      app.add_subcommand("serialize", "Print each CSV row as its serialized string, a tab, and its class index");
  serialize_cmd->add_option("input", serialize_input, "CSV file")->required();
  serialize_cmd->add_option("--schema", serialize_schema, "Schema sidecar")->required();

  // generate
  std::string task_name;
  CommonOptions generate_opts;
  std::optional<std::size_t> generate_train;
  std::optional<std::size_t> generate_test;
  double generate_p = 0.5;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic task as train.csv, test.csv and a schema");
  generate_cmd->add_option("task", task_name, "string_equivalence, substring_match or odd_number")->required();
  generate_cmd->add_option("--seed", generate_opts.seed, "Random seed");
  generate_cmd->add_option("--out", generate_opts.out, "Output directory")->required();
  generate_cmd->add_option("--train-rows", generate_train, "Training rows");
  generate_cmd->add_option("--test-rows", generate_test, "Test rows");
  generate_cmd->add_option("-p,--positive-probability", generate_p, "Probability of planting a positive row");

  // train / predict
  std::string train_input;
  std::string train_schema;
  std::string model_path;
  lstm::TrainConfig train_config;
  auto* train_cmd = app.add_subcommand("train", "Train a TBC model on a CSV file and save it as JSON");
  train_cmd->add_option("input", train_input, "CSV file")->required();
  train_cmd->add_option("--schema", train_schema, "Schema sidecar")->required();
  train_cmd->add_option("--model", model_path, "Output model file")->required();
  train_cmd->add_option("--epochs", train_config.epochs, "Training epochs");
  train_cmd->add_option("--batch-size", train_config.batch_size, "Sequences per Adam step");
  train_cmd->add_option("--learning-rate", train_config.learning_rate, "Adam step size");
  train_cmd->add_option("--hidden", train_config.hidden_size, "LSTM hidden size");
  train_cmd->add_option("--seed", train_config.seed, "Initialisation and shuffling seed");

  std::string predict_input;
  std::string predict_schema;
  std::string predict_model;
  auto* predict_cmd = app.add_subcommand("predict", "Print the predicted class of each CSV row");
  predict_cmd->add_option("input", predict_input, "CSV file")->required();
  predict_cmd->add_option("--schema", predict_schema, "Schema sidecar")->required();
  predict_cmd->add_option("--model", predict_model, "Model file written by 'tbc train'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [name, cmd] : controlled_cmds) {
      if (cmd->parsed()) return run_controlled(controlled_ids.at(name), controlled_opts, train_rows, test_rows, epochs);
    }

    if (size_cmd->parsed()) {
      experiments::SizeSweepResult result;
      result.config.seed = size_opts.seed;
      result.config.rows_per_combination = rows_per_combination;
      if (!combinations.empty()) result.config.combinations = combinations;
      if (size_opts.fast) result.config.combinations = {20, 40, 60, 80, 100};
      result.points = experiments::run_size_sweep(result.config);
      print_written(experiments::write_size_sweep(result, output_dir(size_opts, experiments::ExperimentId::fig2_size)));
      for (const auto& p : result.points) std::cout << p.combinations << ',' << p.node_count << '\n';
      return 0;
    }

    if (prune_cmd->parsed()) {
      auto spec = synth::TaskSpec::defaults(synth::TaskKind::string_equivalence, prune_opts.seed);
      if (prune_opts.fast) spec.train_rows = experiments::kFastRows;
      if (prune_rows) spec.train_rows = *prune_rows;
      const auto train = synth::gen_string_equivalence(spec).first;

      auto grid = experiments::default_depth_grid();
      if (!depth_grid.empty()) {
        grid.clear();
        for (const auto& d : depth_grid) {
          if (d == "inf") {
            grid.emplace_back(std::nullopt);
          } else {
            grid.emplace_back(static_cast<std::size_t>(std::stoull(d)));
          }
        }
      }
      experiments::PruneSweepResult result;
      result.seed = prune_opts.seed;
      result.fast = prune_opts.fast;
      result.train_rows = train.size();
      result.points = experiments::run_prune_sweep(train, grid);
      print_written(
          experiments::write_prune_sweep(result, output_dir(prune_opts, experiments::ExperimentId::fig2_prune)));
      for (const auto& p : result.points) {
        std::cout << (p.max_depth ? std::to_string(*p.max_depth) : "inf") << ',' << p.train_accuracy << '\n';
      }
      return 0;
    }

    if (public_cmd->parsed()) {
      experiments::PublicConfig config;
      config.seed = public_opts.seed;
      config.fast = public_opts.fast;
      config.folds = folds;
      config.epochs = public_epochs;
      public_opts.apply(config.settings);
      if (!public_opts.models.empty()) config.models = experiments::parse_model_list(public_opts.models);
      const auto datasets = parse_assignments(dataset_args, "--dataset");
      const auto schemas = parse_assignments(schema_args, "--schema");
      for (const auto& [name, _] : schemas) {
        if (!datasets.contains(name)) throw Error("--schema given for unknown dataset '" + name + "'");
      }
      // Keep the command-line order of datasets.
      for (const auto& arg : dataset_args) {
        const auto name = arg.substr(0, arg.find('='));
        const auto it = schemas.find(name);
        const fs::path schema = it != schemas.end() ? fs::path(it->second) : fs::path(schema_dir) / (name + ".schema");
        config.datasets.push_back({name, datasets.at(name), schema});
      }
      const auto result = experiments::run_public(config);
      print_written(experiments::write_public(result, output_dir(public_opts, experiments::ExperimentId::table4)));
      std::cout << experiments::public_report_markdown(result);
      return 0;
    }

    if (serialize_cmd->parsed()) {
      const auto table = load_table(serialize_input, serialize_schema);
      const auto classes = data::ClassDictionary::from_table(table);
      for (const auto& inst : text::serialize_table(table, classes)) {
        std::cout << inst.text << '\t' << inst.class_index << '\n';
      }
      return 0;
    }

    if (generate_cmd->parsed()) {
      auto spec = synth::TaskSpec::defaults(synth::parse_task_kind(task_name), generate_opts.seed);
      spec.positive_probability = generate_p;
      if (generate_train) spec.train_rows = *generate_train;
      if (generate_test) spec.test_rows = *generate_test;
      const auto [train, test] = synth::generate(spec);
      const fs::path dir(generate_opts.out);
      fs::create_directories(dir);
      for (const auto& [name, table] : {std::pair{"train.csv", &train}, std::pair{"test.csv", &test}}) {
        std::ofstream out(dir / name);
        if (!out) throw FileError("cannot write", (dir / name).string());
        data::write_csv(out, *table);
      }
      std::ofstream schema(dir / "task.schema");
      schema << data::format_schema(train.schema());
      std::cerr << "wrote " << train.size() << " train and " << test.size() << " test rows to " << dir.string()
                << '\n';
      return 0;
    }

    if (train_cmd->parsed()) {
      const auto table = load_table(train_input, train_schema);
      const auto classes = data::ClassDictionary::from_table(table);
      const auto instances = text::serialize_table(table, classes);
      const auto model = lstm::train(instances, classes, train_config, [](std::size_t epoch, double loss) {
        std::cerr << "epoch " << epoch + 1 << " loss " << loss << '\n';
      });
      lstm::save_model(model, model_path);
      return 0;
    }

    if (predict_cmd->parsed()) {
      const auto model = lstm::load_model(predict_model);
      const auto table = load_table(predict_input, predict_schema);
      for (const auto& row : table.rows()) std::cout << lstm::predict(model, row) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "tbc: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
