#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "tbc/baselines/tree.hpp"
#include "tbc/error.hpp"

using namespace tbc::baselines;
using tbc::num::Tensor2;

namespace {

std::size_t accuracy_count(const DecisionTree& tree, const Tensor2& X, const std::vector<std::size_t>& y) {
  std::size_t n = 0;
  for (std::size_t r = 0; r < X.rows(); ++r) n += tree.predict(X.row(r)) == y[r];
  return n;
}

}  // namespace

// Hand-worked split: x = {1, 2, 3, 10}, y = {0, 0, 1, 1}. The best Gini split
// is between 2 and 3, so the threshold is 2.5 and both children are pure.
TEST(Tree, PicksMidpointThreshold) {
  const Tensor2 X{{1}, {2}, {3}, {10}};
  const std::vector<std::size_t> y{0, 0, 1, 1};
  const auto tree = dt_fit(X, y, 2);
  ASSERT_EQ(tree.node_count(), 3u);
  const auto& root = tree.nodes()[0];
  EXPECT_EQ(root.feature, 0);
  EXPECT_DOUBLE_EQ(root.threshold, 2.5);
  EXPECT_EQ(root.counts, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(tree.depth(), 1u);
  EXPECT_EQ(tree.leaf_count(), 2u);
  EXPECT_EQ(dt_node_count(tree), 3u);
}

TEST(Tree, TiesPreferLowerFeature) {
  // Both features separate the classes perfectly.
  const Tensor2 X{{0, 5}, {1, 6}};
  const std::vector<std::size_t> y{0, 1};
  EXPECT_EQ(dt_fit(X, y, 2).nodes()[0].feature, 0);
}

TEST(Tree, PureInputIsSingleLeaf) {
  const Tensor2 X{{1}, {2}, {3}};
  const std::vector<std::size_t> y{1, 1, 1};
  const auto tree = dt_fit(X, y, 3);
  EXPECT_EQ(tree.node_count(), 1u);
  EXPECT_EQ(tree.predict(std::vector<double>{100}), 1u);
}

TEST(Tree, ConstantFeaturesGiveMajorityLeafTiesLow) {
  const Tensor2 X{{1}, {1}, {1}, {1}};
  const std::vector<std::size_t> y{1, 0, 1, 0};
  const auto tree = dt_fit(X, y, 2);
  EXPECT_EQ(tree.node_count(), 1u);
  EXPECT_EQ(tree.predict(std::vector<double>{1}), 0u);
}

// XOR needs depth 2; unlimited depth fits training data exactly.
TEST(Tree, UnprunedFitsTrainingDataPerfectly) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  Tensor2 X(300, 4);
  std::vector<std::size_t> y(300);
  for (std::size_t r = 0; r < 300; ++r) {
    for (std::size_t c = 0; c < 4; ++c) X(r, c) = std::round(u(rng) * 1000) / 1000;
    y[r] = (X(r, 0) > 0.5) != (X(r, 1) > 0.5) ? 1 : 0;
  }
  const auto tree = dt_fit(X, y, 2);
  EXPECT_EQ(accuracy_count(tree, X, y), 300u);
  // Depth 1 cannot represent XOR.
  TreeConfig stump;
  stump.max_depth = 1;
  const auto shallow = dt_fit(X, y, 2, stump);
  EXPECT_LE(shallow.depth(), 1u);
  EXPECT_LT(accuracy_count(shallow, X, y), 250u);
}

TEST(Tree, MaxDepthIsRespectedAndAccuracyMonotone) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> v(0, 20);
  Tensor2 X(200, 3);
  std::vector<std::size_t> y(200);
  for (std::size_t r = 0; r < 200; ++r) {
    for (std::size_t c = 0; c < 3; ++c) X(r, c) = v(rng);
    y[r] = static_cast<std::size_t>(v(rng) % 3);
  }
  std::size_t previous = 0;
  for (std::size_t depth = 1; depth <= 12; ++depth) {
    TreeConfig config;
    config.max_depth = depth;
    const auto tree = dt_fit(X, y, 3, config);
    EXPECT_LE(tree.depth(), depth);
    for (const auto& node : tree.nodes()) EXPECT_LE(node.depth, depth);
    const auto correct = accuracy_count(tree, X, y);
    EXPECT_GE(correct, previous);
    previous = correct;
  }
}

TEST(Tree, MinSamplesSplitStopsGrowth) {
  const Tensor2 X{{1}, {2}, {3}, {4}};
  const std::vector<std::size_t> y{0, 1, 0, 1};
  TreeConfig config;
  config.min_samples_split = 5;
  EXPECT_EQ(dt_fit(X, y, 2, config).node_count(), 1u);
}

TEST(Tree, InputValidation) {
  const Tensor2 X{{1}, {2}};
  EXPECT_THROW(dt_fit(X, std::vector<std::size_t>{0}, 2), tbc::Error);
  EXPECT_THROW(dt_fit(X, std::vector<std::size_t>{0, 2}, 2), tbc::Error);
  EXPECT_THROW(dt_fit(Tensor2(0, 1), std::vector<std::size_t>{}, 2), tbc::Error);
  TreeConfig bad;
  bad.max_depth = 0;
  EXPECT_THROW(bad.validate(), tbc::Error);
  const auto tree = dt_fit(X, std::vector<std::size_t>{0, 1}, 2);
  EXPECT_THROW(tree.predict(std::vector<double>{1, 2}), tbc::Error);
}

TEST(Tree, DumpNamesFeatures) {
  const Tensor2 X{{1}, {2}};
  const auto tree = dt_fit(X, std::vector<std::size_t>{0, 1}, 2);
  std::ostringstream out;
  const std::vector<std::string> names{"width"};
  tree.dump(out, names);
  EXPECT_NE(out.str().find("feature=0 (width) threshold=1.5"), std::string::npos) << out.str();
}
