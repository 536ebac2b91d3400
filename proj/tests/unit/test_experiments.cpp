#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tbc/error.hpp"
#include "tbc/experiments/classifiers.hpp"
#include "tbc/experiments/controlled.hpp"
#include "tbc/experiments/output.hpp"
#include "tbc/experiments/public_datasets.hpp"
#include "tbc/experiments/tree_analysis.hpp"

using namespace tbc::experiments;
namespace fs = std::filesystem;

namespace {

fs::path repo_data() { return fs::path(TBC_TEST_DATA_DIR) / ".." / ".." / "data"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tbc_test_" + name);
  fs::remove_all(dir);
  return dir;
}

ControlledConfig small(ExperimentId id) {
  ControlledConfig c;
  c.id = id;
  c.fast = true;
  c.train_rows = 60;
  c.test_rows = 30;
  c.epochs = 1;
  return c;
}

}  // namespace

TEST(ModelKinds, ParseLists) {
  EXPECT_EQ(parse_model_list("tbc,DT, svm"), (std::vector<ModelKind>{ModelKind::tbc, ModelKind::dt, ModelKind::svm}));
  EXPECT_THROW(parse_model_list("tbc,tbc"), tbc::Error);
  EXPECT_THROW(parse_model_list(""), tbc::Error);
  EXPECT_THROW(parse_model_kind("xgboost"), tbc::Error);
  for (auto k : {ModelKind::tbc, ModelKind::dt, ModelKind::rf, ModelKind::svm, ModelKind::mlp}) {
    EXPECT_EQ(parse_model_kind(to_string(k)), k);
  }
}

TEST(ExperimentIds, RoundTripAndTasks) {
  EXPECT_EQ(parse_experiment_id("table3"), ExperimentId::table3);
  EXPECT_EQ(task_for(ExperimentId::table3), tbc::synth::TaskKind::odd_number);
  EXPECT_EQ(task_for(ExperimentId::table1), tbc::synth::TaskKind::string_equivalence);
  EXPECT_THROW(parse_experiment_id("table9"), tbc::Error);
}

TEST(Controlled, SpecHonoursFastModeAndOverrides) {
  ControlledConfig c;
  c.id = ExperimentId::table3;
  EXPECT_EQ(controlled_spec(c).train_rows, 800u);
  c.fast = true;
  const auto fast = controlled_spec(c);
  EXPECT_EQ(fast.train_rows, kFastRows);
  EXPECT_EQ(fast.test_rows, 50u);  // same 4:1 ratio
  c.train_rows = 10;
  EXPECT_EQ(controlled_spec(c).train_rows, 10u);
}

TEST(Controlled, RunsEveryModelOnEveryTask) {
  for (auto id : {ExperimentId::table1, ExperimentId::table2, ExperimentId::table3}) {
    const auto r = run_controlled(small(id));
    ASSERT_EQ(r.runs.size(), 3u) << to_string(id);
    EXPECT_EQ(r.classes.names(), (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(r.runs[0].kind, ModelKind::tbc);
    EXPECT_EQ(r.runs[0].loss_history.size(), 1u);
    EXPECT_GT(r.runs[1].tree_nodes, 0u);
    // An unpruned tree memorises its training split.
    EXPECT_DOUBLE_EQ(r.runs[1].outcome.train.metrics.accuracy, 1.0);
    for (const auto& run : r.runs) EXPECT_EQ(run.outcome.test_predictions.size(), 30u);
  }
  EXPECT_THROW(run_controlled(small(ExperimentId::fig2_size)), tbc::Error);
}

TEST(Controlled, ReportJsonIsByteIdenticalAcrossRuns) {
  const auto a = run_controlled(small(ExperimentId::table2));
  const auto b = run_controlled(small(ExperimentId::table2));
  EXPECT_EQ(controlled_report_json(a), controlled_report_json(b));

  auto other = small(ExperimentId::table2);
  other.seed = 1;
  EXPECT_NE(controlled_report_json(run_controlled(other)), controlled_report_json(a));
}

TEST(Controlled, WritesOutputFiles) {
  const auto dir = scratch("controlled");
  const auto r = run_controlled(small(ExperimentId::table1));
  const auto files = write_controlled(r, dir);
  for (const char* name : {"report.json", "report.md", "timings.json", "predictions.csv", "train.csv", "test.csv",
                           "tbc_loss.csv"}) {
    EXPECT_TRUE(fs::exists(dir / name)) << name;
  }
  EXPECT_EQ(files.size(), 7u);
  EXPECT_EQ(slurp(dir / "report.json"), controlled_report_json(r));
  EXPECT_EQ(slurp(dir / "report.json").find("seconds"), std::string::npos);
  EXPECT_NE(slurp(dir / "timings.json").find("seconds"), std::string::npos);
  fs::remove_all(dir);
}

TEST(TreeAnalysis, SizeSweepGrows) {
  SizeSweepConfig config;
  config.combinations = {20, 40, 80};
  const auto points = run_size_sweep(config);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_LT(points[0].node_count, points[1].node_count);
  EXPECT_LT(points[1].node_count, points[2].node_count);
  for (const auto& p : points) EXPECT_DOUBLE_EQ(p.train_accuracy, 1.0);
}

TEST(TreeAnalysis, PruneSweepIsMonotone) {
  auto spec = tbc::synth::TaskSpec::defaults(tbc::synth::TaskKind::string_equivalence, 0);
  spec.train_rows = 150;
  spec.test_rows = 1;
  const auto [train, test] = tbc::synth::generate(spec);
  const auto grid = default_depth_grid();
  EXPECT_FALSE(grid.back().has_value());
  const auto points = run_prune_sweep(train, grid);
  ASSERT_EQ(points.size(), grid.size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    EXPECT_GE(points[i].train_accuracy, points[i - 1].train_accuracy);
  }
  EXPECT_DOUBLE_EQ(points.back().train_accuracy, 1.0);
}

TEST(TreeAnalysis, Pearson) {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{2, 4, 6, 8};
  const std::vector<double> z{8, 6, 4, 2};
  EXPECT_NEAR(pearson(x, y), 1.0, 1e-12);
  EXPECT_NEAR(pearson(x, z), -1.0, 1e-12);
  const std::vector<double> flat{1, 1, 1, 1};
  EXPECT_EQ(pearson(x, flat), 0.0);
  EXPECT_THROW(pearson(x, std::vector<double>{1, 2}), tbc::Error);
}

TEST(PublicDatasets, BatchAndPositiveRules) {
  EXPECT_EQ(tbc_batch_for("iris"), 1u);
  EXPECT_EQ(tbc_batch_for("dress"), 1u);
  EXPECT_EQ(tbc_batch_for("adult"), 32u);
  const std::vector<std::string> two{"<=50K", ">50K"};
  EXPECT_EQ(positive_class_for(tbc::data::ClassDictionary(two)), 1u);
  const std::vector<std::string> three{"a", "b", "c"};
  EXPECT_FALSE(positive_class_for(tbc::data::ClassDictionary(three)).has_value());
}

TEST(PublicDatasets, MissingFileNamesThePath) {
  PublicConfig config;
  config.datasets = {{"dress", "/nonexistent/dress.csv", repo_data() / "schemas" / "dress.schema"}};
  try {
    (void)run_public(config);
    FAIL() << "expected FileError";
  } catch (const tbc::FileError& e) {
    EXPECT_EQ(e.path(), "/nonexistent/dress.csv");
  }
}

TEST(PublicDatasets, IrisCrossValidationEndToEnd) {
  const auto csv = repo_data() / "public" / "iris.csv";
  if (!fs::exists(csv)) GTEST_SKIP() << "iris.csv not prepared";
  PublicConfig config;
  config.datasets = {{"iris", csv, repo_data() / "schemas" / "iris.schema"}};
  config.fast = true;
  config.folds = 3;
  config.epochs = 1;
  const auto r = run_public(config);
  ASSERT_EQ(r.datasets.size(), 1u);
  const auto& d = r.datasets[0];
  EXPECT_EQ(d.rows, 150u);
  EXPECT_EQ(d.classes.size(), 3u);
  EXPECT_FALSE(d.positive.has_value());
  ASSERT_EQ(d.models.size(), 4u);
  for (const auto& m : d.models) {
    EXPECT_EQ(m.folds.size(), 3u);
    EXPECT_EQ(m.test.averaging, tbc::eval::Averaging::micro);
    EXPECT_NEAR(m.test.metrics.precision, m.test.metrics.accuracy, 1e-12);
  }
  EXPECT_GE(d.models[1].test.metrics.accuracy, 0.85);  // RF

  EXPECT_EQ(public_report_json(r), public_report_json(run_public(config)));
  const auto dir = scratch("public");
  write_public(r, dir);
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  EXPECT_TRUE(fs::exists(dir / "predictions.csv"));
  fs::remove_all(dir);
}
