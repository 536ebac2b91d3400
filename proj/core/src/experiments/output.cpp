#include "tbc/experiments/output.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tbc/data/csv.hpp"
#include "tbc/error.hpp"

#ifndef TBC_VERSION
#define TBC_VERSION "unknown"
#endif

namespace tbc::experiments {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string library_version() { return TBC_VERSION; }

namespace {

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write output file", path.string());
  out << content;
  if (!out) throw FileError("failed while writing", path.string());
  return path;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json optional_json(const std::optional<std::size_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json settings_json(const ModelSettings& s) {
  return {
      {"tbc",
       {{"epochs", s.tbc.epochs},
        {"batch_size", s.tbc.batch_size},
        {"learning_rate", s.tbc.learning_rate},
        {"hidden_size", s.tbc.hidden_size},
        {"init_scale", s.tbc.init_scale},
        {"forget_bias", s.tbc.forget_bias},
        {"clip_norm", s.tbc.clip_norm},
        {"shuffle", s.tbc.shuffle}}},
      {"dt", {{"max_depth", optional_json(s.tree.max_depth)}, {"min_samples_split", s.tree.min_samples_split}}},
      {"rf",
       {{"n_trees", s.forest.n_trees},
        {"features_per_split", optional_json(s.forest.features_per_split)},
        {"bootstrap", s.forest.bootstrap}}},
      {"svm", {{"lambda", s.svm.lambda}, {"epochs", s.svm.epochs}}},
      {"mlp",
       {{"epochs", s.mlp.epochs},
        {"batch_size", s.mlp.batch_size},
        {"learning_rate", s.mlp.learning_rate},
        {"hidden", s.mlp.hidden}}},
  };
}

ordered_json models_json(const std::vector<ModelKind>& models) {
  ordered_json out = ordered_json::array();
  for (auto m : models) out.push_back(std::string(to_string(m)));
  return out;
}

ordered_json metrics_json(const eval::Metrics& m) {
  return {{"accuracy", m.accuracy}, {"precision", m.precision}, {"recall", m.recall}};
}

// Scores only; times are deliberately left out.
ordered_json report_json(const eval::EvalReport& r) {
  ordered_json per_class = ordered_json::array();
  for (std::size_t c = 0; c < r.per_class.size(); ++c) {
    per_class.push_back({{"class", r.class_names[c]},
                         {"precision", r.per_class[c].precision},
                         {"recall", r.per_class[c].recall},
                         {"support", r.confusion.row_total(c)}});
  }
  ordered_json matrix = ordered_json::array();
  for (std::size_t t = 0; t < r.confusion.classes(); ++t) {
    ordered_json row = ordered_json::array();
    for (std::size_t p = 0; p < r.confusion.classes(); ++p) row.push_back(r.confusion(t, p));
    matrix.push_back(std::move(row));
  }
  ordered_json j = {{"model", r.model}, {"split", r.split}, {"averaging", std::string(eval::to_string(r.averaging))}};
  j["positive_class"] = r.positive ? ordered_json(r.class_names[*r.positive]) : ordered_json(nullptr);
  j["metrics"] = metrics_json(r.metrics);
  j["per_class"] = std::move(per_class);
  j["confusion"] = std::move(matrix);
  j["notes"] = r.notes;
  return j;
}

ordered_json timing_json(const eval::EvalReport& r) {
  return {{"model", r.model},
          {"split", r.split},
          {"train_seconds", r.train_seconds},
          {"inference_seconds", r.inference_seconds}};
}

std::size_t count_label(const data::Table& t, std::string_view label) {
  std::size_t n = 0;
  for (const auto& l : t.labels()) n += l == label;
  return n;
}

std::string bullet_list(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += "- " + s + "\n";
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<eval::EvalReport> controlled_reports(const ControlledResult& result) {
  std::vector<eval::EvalReport> reports;
  for (const auto& run : result.runs) {
    reports.push_back(run.outcome.train);
    reports.push_back(run.outcome.test);
  }
  return reports;
}

std::string_view task_title(ExperimentId id) {
  switch (id) {
    case ExperimentId::table1: return "String equivalence";
    case ExperimentId::table2: return "Substring matching";
    case ExperimentId::table3: return "Odd numbers";
    case ExperimentId::fig2_size: return "Tree size against distinct combinations";
    case ExperimentId::fig2_prune: return "Training accuracy against maximum depth";
    case ExperimentId::table4: return "Public datasets";
  }
  return "";
}

}  // namespace

std::string controlled_report_json(const ControlledResult& result) {
  const auto& c = result.config;
  const auto& s = result.spec;
  ordered_json config = {
      {"seed", c.seed},
      {"fast", c.fast},
      {"models", models_json(c.models)},
      {"task",
       {{"kind", std::string(synth::to_string(s.kind))},
        {"train_rows", s.train_rows},
        {"test_rows", s.test_rows},
        {"positive_probability", s.positive_probability},
        {"alphabet", s.alphabet},
        {"word_length", {s.min_word_length, s.max_word_length}},
        {"value_range", {s.min_value, s.max_value}}}},
      {"settings", settings_json(c.settings)},
  };
  // Epoch count as actually used after --fast and overrides.
  config["settings"]["tbc"]["epochs"] =
      c.epochs ? *c.epochs : (c.fast ? kFastEpochs : c.settings.tbc.epochs);

  ordered_json data = {
      {"train", {{"rows", result.train.size()}, {"positives", count_label(result.train, synth::kPositiveLabel)}}},
      {"test", {{"rows", result.test.size()}, {"positives", count_label(result.test, synth::kPositiveLabel)}}},
  };

  ordered_json reports = ordered_json::array();
  for (const auto& r : controlled_reports(result)) reports.push_back(report_json(r));

  ordered_json extras = ordered_json::object();
  for (const auto& run : result.runs) {
    if (run.kind == ModelKind::tbc) extras["tbc_loss_history"] = run.loss_history;
    if (run.kind == ModelKind::dt) extras["dt_tree"] = {{"nodes", run.tree_nodes}, {"depth", run.tree_depth}};
  }

  ordered_json doc = {
      {"tool", "tbc"},
      {"version", library_version()},
      {"experiment", std::string(to_string(c.id))},
      {"config", std::move(config)},
      {"classes", result.classes.names()},
      {"data", std::move(data)},
      {"notes", result.notes},
      {"reports", std::move(reports)},
      {"details", std::move(extras)},
  };
  return dump(doc);
}

std::string controlled_report_markdown(const ControlledResult& result) {
  const auto reports = controlled_reports(result);
  std::ostringstream md;
  md << "# " << to_string(result.config.id) << ": " << task_title(result.config.id) << "\n\n";
  md << "tbc " << library_version() << ", seed " << result.config.seed << ", "
     << result.train.size() << " train rows (" << count_label(result.train, synth::kPositiveLabel)
     << " positive), " << result.test.size() << " test rows (" << count_label(result.test, synth::kPositiveLabel)
     << " positive).\n\n";
  md << bullet_list(result.notes) << "\n";
  md << markdown_table(reports, true) << "\n";
  md << "## Per-class scores\n\n" << markdown_class_table(reports) << "\n";
  for (const auto& run : result.runs) {
    if (run.kind == ModelKind::dt) {
      md << "Unpruned tree: " << run.tree_nodes << " nodes, depth " << run.tree_depth << ".\n\n";
    }
    if (run.kind == ModelKind::tbc && !run.loss_history.empty()) {
      md << "TBC training loss: first epoch " << eval::format_score(run.loss_history.front()) << ", last epoch "
         << eval::format_score(run.loss_history.back()) << ".\n\n";
    }
    for (const auto& note : run.outcome.test.notes) md << run.outcome.test.model << ": " << note << ".\n\n";
  }
  return md.str();
}

std::vector<fs::path> write_controlled(const ControlledResult& result, const fs::path& dir) {
  std::vector<fs::path> written;
  written.push_back(write_file(dir, "report.json", controlled_report_json(result)));
  written.push_back(write_file(dir, "report.md", controlled_report_markdown(result)));

  ordered_json timings = ordered_json::array();
  for (const auto& r : controlled_reports(result)) timings.push_back(timing_json(r));
  written.push_back(write_file(dir, "timings.json", dump(timings)));

  std::ostringstream pred;
  pred << "model,split,row,truth,predicted\n";
  auto emit = [&](const std::string& model, std::string_view split, const data::Table& table,
                  const std::vector<std::size_t>& predictions) {
    for (std::size_t i = 0; i < predictions.size(); ++i) {
      pred << model << ',' << split << ',' << i << ',' << csv_field(table.labels()[i]) << ','
           << csv_field(result.classes.name(predictions[i])) << '\n';
    }
  };
  for (const auto& run : result.runs) {
    emit(run.outcome.train.model, "train", result.train, run.outcome.train_predictions);
    emit(run.outcome.test.model, "test", result.test, run.outcome.test_predictions);
  }
  written.push_back(write_file(dir, "predictions.csv", pred.str()));

  std::ostringstream train_csv;
  data::write_csv(train_csv, result.train);
  written.push_back(write_file(dir, "train.csv", train_csv.str()));
  std::ostringstream test_csv;
  data::write_csv(test_csv, result.test);
  written.push_back(write_file(dir, "test.csv", test_csv.str()));

  for (const auto& run : result.runs) {
    if (run.kind != ModelKind::tbc) continue;
    std::ostringstream loss;
    loss << "epoch,loss\n";
    for (std::size_t e = 0; e < run.loss_history.size(); ++e) {
      loss << e + 1 << ',' << data::format_number(run.loss_history[e]) << '\n';
    }
    written.push_back(write_file(dir, "tbc_loss.csv", loss.str()));
  }
  return written;
}

std::string size_sweep_json(const SizeSweepResult& result) {
  ordered_json points = ordered_json::array();
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : result.points) {
    points.push_back({{"combinations", p.combinations},
                      {"rows", p.rows},
                      {"node_count", p.node_count},
                      {"leaf_count", p.leaf_count},
                      {"depth", p.depth},
                      {"train_accuracy", p.train_accuracy}});
    x.push_back(static_cast<double>(p.combinations));
    y.push_back(static_cast<double>(p.node_count));
  }
  ordered_json doc = {
      {"tool", "tbc"},
      {"version", library_version()},
      {"experiment", "fig2_size"},
      {"config",
       {{"seed", result.config.seed},
        {"combinations", result.config.combinations},
        {"rows_per_combination", result.config.rows_per_combination},
        {"positive_probability", result.config.positive_probability}}},
      {"notes", {"unpruned CART on one-hot encoded string-equivalence pairs"}},
      {"points", std::move(points)},
  };
  doc["pearson_correlation"] = x.size() >= 2 ? ordered_json(pearson(x, y)) : ordered_json(nullptr);
  return dump(doc);
}

std::string prune_sweep_json(const PruneSweepResult& result) {
  ordered_json points = ordered_json::array();
  for (const auto& p : result.points) {
    points.push_back({{"max_depth", optional_json(p.max_depth)},
                      {"train_accuracy", p.train_accuracy},
                      {"node_count", p.node_count},
                      {"depth", p.depth}});
  }
  ordered_json doc = {
      {"tool", "tbc"},
      {"version", library_version()},
      {"experiment", "fig2_prune"},
      {"config", {{"seed", result.seed}, {"fast", result.fast}, {"train_rows", result.train_rows}}},
      {"notes", {"CART capped at each maximum depth, scored on the string-equivalence training set"}},
      {"points", std::move(points)},
  };
  return dump(doc);
}

std::vector<fs::path> write_size_sweep(const SizeSweepResult& result, const fs::path& dir) {
  std::ostringstream csv;
  csv << "combinations,node_count\n";
  for (const auto& p : result.points) csv << p.combinations << ',' << p.node_count << '\n';

  std::ostringstream md;
  md << "# fig2_size: " << task_title(ExperimentId::fig2_size) << "\n\n";
  md << "| Combinations | Rows | Nodes | Leaves | Depth | Train accuracy |\n";
  md << "|---|---|---|---|---|---|\n";
  for (const auto& p : result.points) {
    md << "| " << p.combinations << " | " << p.rows << " | " << p.node_count << " | " << p.leaf_count << " | "
       << p.depth << " | " << eval::format_score(p.train_accuracy) << " |\n";
  }
  return {write_file(dir, "fig2_size.csv", csv.str()), write_file(dir, "report.json", size_sweep_json(result)),
          write_file(dir, "report.md", md.str())};
}

std::vector<fs::path> write_prune_sweep(const PruneSweepResult& result, const fs::path& dir) {
  std::ostringstream csv;
  csv << "max_depth,train_accuracy\n";
  for (const auto& p : result.points) {
    csv << (p.max_depth ? std::to_string(*p.max_depth) : std::string("inf")) << ','
        << data::format_number(p.train_accuracy) << '\n';
  }

  std::ostringstream md;
  md << "# fig2_prune: " << task_title(ExperimentId::fig2_prune) << "\n\n";
  md << result.train_rows << " training rows, seed " << result.seed << ".\n\n";
  md << "| Max depth | Train accuracy | Nodes | Depth |\n|---|---|---|---|\n";
  for (const auto& p : result.points) {
    md << "| " << (p.max_depth ? std::to_string(*p.max_depth) : std::string("unlimited")) << " | "
       << eval::format_score(p.train_accuracy) << " | " << p.node_count << " | " << p.depth << " |\n";
  }
  return {write_file(dir, "fig2_prune.csv", csv.str()), write_file(dir, "report.json", prune_sweep_json(result)),
          write_file(dir, "report.md", md.str())};
}

std::string public_report_json(const PublicResult& result) {
  const auto& c = result.config;
  ordered_json datasets = ordered_json::array();
  for (const auto& d : result.datasets) {
    ordered_json models = ordered_json::array();
    for (const auto& m : d.models) {
      ordered_json folds = ordered_json::array();
      for (const auto& f : m.folds) {
        folds.push_back({{"fold", f.fold},
                         {"train_rows", f.train_rows.size()},
                         {"test_rows", f.test_rows.size()},
                         {"train", report_json(f.outcome.train)},
                         {"test", report_json(f.outcome.test)}});
      }
      models.push_back({{"model", m.model},
                        {"train", report_json(m.train)},
                        {"test", report_json(m.test)},
                        {"folds", std::move(folds)}});
    }
    datasets.push_back({{"name", d.source.name},
                        {"csv", d.source.csv.filename().string()},
                        {"rows", d.rows},
                        {"original_rows", d.original_rows},
                        {"classes", d.classes.names()},
                        {"tbc_batch_size", d.tbc_batch_size},
                        {"models", std::move(models)}});
  }
  ordered_json config = {
      {"seed", c.seed},
      {"fast", c.fast},
      {"folds", c.folds},
      {"models", models_json(c.models)},
      {"settings", settings_json(c.settings)},
  };
  config["settings"]["tbc"]["epochs"] = c.epochs ? *c.epochs : (c.fast ? kFastEpochs : c.settings.tbc.epochs);
  config["settings"]["tbc"].erase("batch_size");

  ordered_json doc = {
      {"tool", "tbc"},
      {"version", library_version()},
      {"experiment", "table4"},
      {"config", std::move(config)},
      {"notes", result.notes},
      {"datasets", std::move(datasets)},
  };
  return dump(doc);
}

std::string public_report_markdown(const PublicResult& result) {
  std::ostringstream md;
  md << "# table4: " << task_title(ExperimentId::table4) << "\n\n";
  md << "tbc " << library_version() << ", seed " << result.config.seed << ", " << result.config.folds
     << "-fold cross-validation.\n\n";
  md << bullet_list(result.notes) << "\n";
  for (const auto& d : result.datasets) {
    md << "## " << d.source.name << "\n\n";
    md << d.rows << " rows, " << d.classes.size() << " classes, TBC batch size " << d.tbc_batch_size;
    if (d.positive) md << ", positive class \"" << d.classes.name(*d.positive) << "\"";
    md << ". Times are per-fold means.\n\n";
    std::vector<eval::EvalReport> reports;
    for (const auto& m : d.models) {
      reports.push_back(m.train);
      reports.push_back(m.test);
    }
    md << markdown_table(reports, true) << "\n";
    md << markdown_class_table(reports) << "\n";
  }
  return md.str();
}

std::vector<fs::path> write_public(const PublicResult& result, const fs::path& dir) {
  std::vector<fs::path> written;
  written.push_back(write_file(dir, "report.json", public_report_json(result)));
  written.push_back(write_file(dir, "report.md", public_report_markdown(result)));

  ordered_json timings = ordered_json::array();
  std::ostringstream pred;
  pred << "dataset,model,fold,split,row,truth,predicted\n";
  for (const auto& d : result.datasets) {
    for (const auto& m : d.models) {
      for (const auto& f : m.folds) {
        for (const auto* r : {&f.outcome.train, &f.outcome.test}) {
          auto t = timing_json(*r);
          t["dataset"] = d.source.name;
          t["fold"] = f.fold;
          timings.push_back(std::move(t));
        }
        // Row numbers index the (possibly subsampled) dataset in file order.
        auto emit = [&](std::string_view split, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& predictions) {
          for (std::size_t i = 0; i < rows.size(); ++i) {
            pred << csv_field(d.source.name) << ',' << m.model << ',' << f.fold << ',' << split << ',' << rows[i]
                 << ',' << csv_field(d.labels[rows[i]]) << ',' << csv_field(d.classes.name(predictions[i])) << '\n';
          }
        };
        emit("train", f.train_rows, f.outcome.train_predictions);
        emit("test", f.test_rows, f.outcome.test_predictions);
      }
    }
  }
  written.push_back(write_file(dir, "timings.json", dump(timings)));
  written.push_back(write_file(dir, "predictions.csv", pred.str()));
  return written;
}

}  // namespace tbc::experiments
