#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tbc/data/partition.hpp"
#include "tbc/error.hpp"

using namespace tbc::data;

namespace {

Table numbered(std::size_t n) {
  const Schema schema({{"x", ColumnKind::numeric}, {"y", ColumnKind::label}});
  std::vector<Row> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({FeatureValue::numeric(static_cast<double>(i))});
    labels.push_back(std::to_string(i % 2));
  }
  return Table(schema, rows, labels);
}

}  // namespace

TEST(Split, EightyTwenty) {
  const auto [train, test] = split_train_test(numbered(1000), 0.2, 7);
  EXPECT_EQ(train.size(), 800u);
  EXPECT_EQ(test.size(), 200u);
}

TEST(Split, FractionMustBeInOpenInterval) {
  EXPECT_THROW(split_train_test(numbered(10), 0.0, 1), tbc::Error);
  EXPECT_THROW(split_train_test(numbered(10), 1.0, 1), tbc::Error);
  EXPECT_THROW(split_train_test(numbered(0), 0.5, 1), tbc::Error);
}

TEST(Split, Deterministic) {
  EXPECT_EQ(split_indices(100, 0.3, 5).test, split_indices(100, 0.3, 5).test);
  EXPECT_NE(split_indices(100, 0.3, 5).test, split_indices(100, 0.3, 6).test);
}

TEST(Split, DisjointUnionIsEverything) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::size_t n : {1u, 2u, 7u, 50u, 333u}) {
      const auto s = split_indices(n, 0.37, seed);
      std::vector<std::size_t> all = s.train;
      all.insert(all.end(), s.test.begin(), s.test.end());
      std::sort(all.begin(), all.end());
      std::vector<std::size_t> expected(n);
      std::iota(expected.begin(), expected.end(), std::size_t{0});
      EXPECT_EQ(all, expected);
      EXPECT_TRUE(std::is_sorted(s.train.begin(), s.train.end()));
      EXPECT_TRUE(std::is_sorted(s.test.begin(), s.test.end()));
      EXPECT_EQ(s.test.size(), static_cast<std::size_t>(std::llround(static_cast<double>(n) * 0.37)));
    }
  }
}

TEST(Folds, IrisSizedFolds) {
  const auto plan = make_folds(numbered(150), 5, 3);
  EXPECT_EQ(plan.fold_sizes(), (std::vector<std::size_t>{30, 30, 30, 30, 30}));
}

TEST(Folds, LeaveOneOut) {
  const auto plan = make_folds(10, 10, 0);
  for (std::size_t f = 0; f < 10; ++f) {
    EXPECT_EQ(plan.test_indices(f).size(), 1u);
    EXPECT_EQ(plan.train_indices(f).size(), 9u);
  }
}

TEST(Folds, ElevenIntoFive) {
  const auto plan = make_folds(11, 5, 9);
  EXPECT_EQ(plan.fold_sizes(), (std::vector<std::size_t>{3, 2, 2, 2, 2}));
}

TEST(Folds, KOutOfRange) {
  EXPECT_THROW(make_folds(10, 1, 0), tbc::Error);
  EXPECT_THROW(make_folds(10, 11, 0), tbc::Error);
}

TEST(Folds, BalancedAndExhaustiveForManyShapes) {
  for (std::size_t n = 2; n < 60; n += 3) {
    for (std::size_t k = 2; k <= std::min<std::size_t>(n, 9); ++k) {
      const auto plan = make_folds(n, k, n * 31 + k);
      const auto sizes = plan.fold_sizes();
      EXPECT_LE(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()), 1u);
      std::multiset<std::size_t> seen;
      for (std::size_t f = 0; f < k; ++f) {
        for (auto i : plan.test_indices(f)) seen.insert(i);
        const auto train = plan.train_indices(f);
        const auto test = plan.test_indices(f);
        EXPECT_EQ(train.size() + test.size(), n);
      }
      EXPECT_EQ(seen.size(), n);
      EXPECT_EQ(std::set<std::size_t>(seen.begin(), seen.end()).size(), n);
    }
  }
}

TEST(Folds, DeterministicGivenSeed) {
  EXPECT_EQ(make_folds(40, 4, 1).assignments(), make_folds(40, 4, 1).assignments());
}
