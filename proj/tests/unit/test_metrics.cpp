#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "tbc/error.hpp"
#include "tbc/eval/metrics.hpp"
#include "tbc/eval/report.hpp"

using namespace tbc::eval;

namespace {

ConfusionMatrix binary(std::size_t tn, std::size_t fp, std::size_t fn, std::size_t tp) {
  ConfusionMatrix cm(2);
  cm.add(0, 0, tn);
  cm.add(0, 1, fp);
  cm.add(1, 0, fn);
  cm.add(1, 1, tp);
  return cm;
}

}  // namespace

TEST(Confusion, CountsAndTotals) {
  const std::vector<std::size_t> truth{0, 0, 1, 1, 2, 2};
  const std::vector<std::size_t> pred{0, 1, 1, 1, 0, 2};
  const auto cm = confusion(truth, pred, 3);
  EXPECT_EQ(cm(0, 0), 1u);
  EXPECT_EQ(cm(0, 1), 1u);
  EXPECT_EQ(cm(2, 0), 1u);
  EXPECT_EQ(cm.total(), 6u);
  EXPECT_EQ(cm.trace(), 4u);
  EXPECT_EQ(cm.row_total(0), 2u);
  EXPECT_EQ(cm.column_total(0), 2u);
  EXPECT_EQ(cm.column_total(1), 3u);
  EXPECT_THROW(confusion(truth, std::vector<std::size_t>{0}, 3), tbc::Error);
  EXPECT_THROW(confusion(truth, pred, 2), tbc::Error);
}

TEST(Confusion, SumRequiresSameSize) {
  auto a = binary(1, 2, 3, 4);
  a += binary(1, 1, 1, 1);
  EXPECT_EQ(a, binary(2, 3, 4, 5));
  EXPECT_THROW(a += ConfusionMatrix(3), tbc::Error);
}

// TP=40, FP=10, FN=20, TN=30.
TEST(BinaryMetrics, HandComputed) {
  const auto m = binary_metrics(binary(30, 10, 20, 40), 1);
  EXPECT_DOUBLE_EQ(m.accuracy, 0.7);
  EXPECT_DOUBLE_EQ(m.precision, 0.8);
  EXPECT_DOUBLE_EQ(m.recall, 40.0 / 60.0);
  // Scored for class 0 instead.
  const auto n = binary_metrics(binary(30, 10, 20, 40), 0);
  EXPECT_DOUBLE_EQ(n.precision, 0.6);
  EXPECT_DOUBLE_EQ(n.recall, 0.75);
}

TEST(BinaryMetrics, ZeroDenominatorsGiveZero) {
  // Nothing predicted positive and nothing truly positive.
  const auto m = binary_metrics(binary(10, 0, 0, 0), 1);
  EXPECT_DOUBLE_EQ(m.accuracy, 1.0);
  EXPECT_DOUBLE_EQ(m.precision, 0.0);
  EXPECT_DOUBLE_EQ(m.recall, 0.0);
  const auto e = binary_metrics(ConfusionMatrix(2), 1);
  EXPECT_EQ(e, Metrics{});
}

TEST(BinaryMetrics, RequiresTwoClasses) {
  EXPECT_THROW(binary_metrics(ConfusionMatrix(3), 1), tbc::Error);
  EXPECT_THROW(binary_metrics(ConfusionMatrix(2), 2), tbc::Error);
}

TEST(MicroMetrics, EqualAccuracyOnRandomMatrices) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> k_dist(2, 8);
  std::uniform_int_distribution<std::size_t> count(0, 50);
  for (int trial = 0; trial < 200; ++trial) {
    ConfusionMatrix cm(k_dist(rng));
    for (std::size_t t = 0; t < cm.classes(); ++t) {
      for (std::size_t p = 0; p < cm.classes(); ++p) cm.add(t, p, count(rng));
    }
    const auto m = micro_metrics(cm);
    const double acc = static_cast<double>(cm.trace()) / static_cast<double>(cm.total());
    EXPECT_NEAR(m.accuracy, acc, 1e-12);
    EXPECT_NEAR(m.precision, acc, 1e-12);
    EXPECT_NEAR(m.recall, acc, 1e-12);
  }
  EXPECT_THROW(micro_metrics(ConfusionMatrix(1)), tbc::Error);
}

TEST(ClassMetrics, OneVsRest) {
  ConfusionMatrix cm(3);
  cm.add(0, 0, 5);
  cm.add(0, 2, 5);
  cm.add(2, 2, 10);
  const auto m = class_metrics(cm, 2);
  EXPECT_NEAR(m.precision, 10.0 / 15.0, 1e-15);
  EXPECT_DOUBLE_EQ(m.recall, 1.0);
  EXPECT_DOUBLE_EQ(class_metrics(cm, 1).precision, 0.0);
}

TEST(Report, BinaryDefaultsToIndexOneAndMulticlassToMicro) {
  const std::vector<std::string> names2{"0", "1"};
  const auto r = make_report("M", "test", names2, binary(30, 10, 20, 40));
  EXPECT_EQ(r.averaging, Averaging::binary);
  EXPECT_EQ(r.positive, 1u);
  EXPECT_DOUBLE_EQ(r.metrics.precision, 0.8);
  ASSERT_EQ(r.per_class.size(), 2u);

  const std::vector<std::string> names3{"a", "b", "c"};
  ConfusionMatrix cm(3);
  cm.add(0, 0, 3);
  cm.add(1, 2, 1);
  const auto m = make_report("M", "train", names3, cm);
  EXPECT_EQ(m.averaging, Averaging::micro);
  EXPECT_FALSE(m.positive.has_value());
  EXPECT_DOUBLE_EQ(m.metrics.precision, 0.75);
}

TEST(Report, MarkdownTables) {
  const std::vector<std::string> names{"0", "1"};
  auto r = make_report("DT", "test", names, binary(30, 10, 20, 40));
  r.train_seconds = 1.5;
  const std::vector<EvalReport> reports{r};
  const auto table = markdown_table(reports, false);
  EXPECT_NE(table.find("| DT"), std::string::npos) << table;
  EXPECT_NE(table.find("0.70"), std::string::npos) << table;
  EXPECT_NE(table.find("0.80"), std::string::npos) << table;
  EXPECT_EQ(table.find("1.5"), std::string::npos) << table;
  EXPECT_NE(markdown_table(reports, true).find("1.5"), std::string::npos);
  EXPECT_EQ(format_score(0.676), "0.68");
  EXPECT_EQ(format_score(1.0), "1.00");
}

TEST(Timing, MeasuresElapsedWallTime) {
  const auto t = timed([] {
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
    return 7;
  });
  EXPECT_EQ(t.value, 7);
  EXPECT_GE(t.seconds, 0.015);
  const auto v = timed([] {});
  EXPECT_GE(v.seconds, 0.0);
}
