#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "tbc/error.hpp"
#include "tbc/synth/tasks.hpp"

using namespace tbc::synth;
using tbc::data::Table;

namespace {

std::size_t positives(const Table& t) {
  std::size_t n = 0;
  for (const auto& l : t.labels()) n += l == kPositiveLabel;
  return n;
}

}  // namespace

TEST(Predicates, FloorParity) {
  EXPECT_TRUE(is_odd_floor(3.0));
  EXPECT_TRUE(is_odd_floor(3.999));
  EXPECT_FALSE(is_odd_floor(4.0));
  EXPECT_FALSE(is_odd_floor(0.5));
  EXPECT_TRUE(is_odd_floor(1.0));
  EXPECT_TRUE(is_odd_floor(-0.5));  // floor is -1
  EXPECT_FALSE(is_odd_floor(-1.5));
}

TEST(Predicates, EitherContains) {
  EXPECT_TRUE(either_contains("abcdef", "cde"));
  EXPECT_TRUE(either_contains("cd", "abcd"));
  EXPECT_TRUE(either_contains("abc", "abc"));
  EXPECT_FALSE(either_contains("abc", "xyz"));
  EXPECT_FALSE(either_contains("abc", "ac"));
}

TEST(RandomWord, RespectsAlphabetAndLength) {
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto w = random_word("xyz", 3, 10, rng);
    EXPECT_GE(w.size(), 3u);
    EXPECT_LE(w.size(), 10u);
    for (char c : w) EXPECT_NE(std::string_view("xyz").find(c), std::string_view::npos);
  }
}

TEST(Spec, DefaultsAndValidation) {
  EXPECT_EQ(TaskSpec::defaults(TaskKind::odd_number).train_rows, 800u);
  EXPECT_EQ(TaskSpec::defaults(TaskKind::odd_number).test_rows, 200u);
  EXPECT_EQ(TaskSpec::defaults(TaskKind::string_equivalence).train_rows, 1000u);
  auto s = TaskSpec::defaults(TaskKind::substring_match);
  s.positive_probability = 1.5;
  EXPECT_THROW(s.validate(), tbc::Error);
  s = TaskSpec::defaults(TaskKind::substring_match);
  s.alphabet.clear();
  EXPECT_THROW(s.validate(), tbc::Error);
  s = TaskSpec::defaults(TaskKind::substring_match);
  s.test_rows = 0;
  EXPECT_THROW(s.validate(), tbc::Error);
  EXPECT_EQ(parse_task_kind(to_string(TaskKind::odd_number)), TaskKind::odd_number);
  EXPECT_THROW(parse_task_kind("nope"), tbc::Error);
}

// Every label is recomputed from the row with the task's predicate.
TEST(StringEquivalence, LabelsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [train, test] = gen_string_equivalence(TaskSpec::defaults(TaskKind::string_equivalence, seed));
    EXPECT_EQ(train.size(), 1000u);
    EXPECT_EQ(test.size(), 500u);
    for (const Table* t : {&train, &test}) {
      for (std::size_t i = 0; i < t->size(); ++i) {
        const auto& row = t->rows()[i];
        const bool equal = row[0].as_string() == row[1].as_string();
        EXPECT_EQ(t->labels()[i], equal ? kPositiveLabel : kNegativeLabel);
      }
    }
  }
}

// Random words from a 26-letter alphabet rarely repeat across splits, which is
// what makes the one-hot encoding of test rows uninformative.
TEST(StringEquivalence, TestVocabularyIsMostlyUnseen) {
  const auto [train, test] = gen_string_equivalence(TaskSpec::defaults(TaskKind::string_equivalence, 1));
  std::set<std::string> vocab;
  for (const auto& row : train.rows()) {
    vocab.insert(row[0].as_string());
    vocab.insert(row[1].as_string());
  }
  std::size_t seen = 0;
  for (const auto& row : test.rows()) seen += vocab.contains(row[0].as_string());
  EXPECT_LT(seen, test.size() / 20);
}

TEST(StringEquivalence, PositiveRateTracksProbability) {
  for (double p : {0.0, 0.2, 0.5, 1.0}) {
    auto spec = TaskSpec::defaults(TaskKind::string_equivalence, 3);
    spec.positive_probability = p;
    spec.train_rows = 4000;
    const auto [train, test] = gen_string_equivalence(spec);
    const double rate = static_cast<double>(positives(train)) / static_cast<double>(train.size());
    EXPECT_NEAR(rate, p, 0.03) << p;
  }
}

TEST(Substring, LabelsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [train, test] = gen_substring(TaskSpec::defaults(TaskKind::substring_match, seed));
    for (const Table* t : {&train, &test}) {
      for (std::size_t i = 0; i < t->size(); ++i) {
        const auto& row = t->rows()[i];
        const bool contains = either_contains(row[0].as_string(), row[1].as_string());
        EXPECT_EQ(t->labels()[i], contains ? kPositiveLabel : kNegativeLabel);
        EXPECT_FALSE(row[1].as_string().empty());
      }
    }
  }
}

TEST(OddNumbers, LabelsMatchOracleAndValuesAreRounded) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [train, test] = gen_odd_numbers(TaskSpec::defaults(TaskKind::odd_number, seed));
    EXPECT_EQ(train.size(), 800u);
    EXPECT_EQ(test.size(), 200u);
    for (const Table* t : {&train, &test}) {
      for (std::size_t i = 0; i < t->size(); ++i) {
        const double v = t->rows()[i][0].as_number();
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 9999.0);
        EXPECT_NEAR(v * 1000.0, std::round(v * 1000.0), 1e-6);
        EXPECT_EQ(t->labels()[i], is_odd_floor(v) ? kPositiveLabel : kNegativeLabel);
      }
    }
  }
}

TEST(Generate, DeterministicAndSeedSensitive) {
  for (auto kind : {TaskKind::string_equivalence, TaskKind::substring_match, TaskKind::odd_number}) {
    const auto a = generate(TaskSpec::defaults(kind, 7));
    const auto b = generate(TaskSpec::defaults(kind, 7));
    const auto c = generate(TaskSpec::defaults(kind, 8));
    EXPECT_EQ(a.first.rows(), b.first.rows());
    EXPECT_EQ(a.second.labels(), b.second.labels());
    EXPECT_NE(a.first.rows(), c.first.rows());
  }
}

TEST(CombinationSweep, ExactDistinctPairs) {
  for (std::size_t n : {1u, 10u, 250u}) {
    const auto t = gen_combination_sweep(n, 3, 5);
    EXPECT_EQ(t.size(), 3 * n);
    std::set<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& row = t.rows()[i];
      pairs.emplace(row[0].as_string(), row[1].as_string());
      const bool equal = row[0].as_string() == row[1].as_string();
      EXPECT_EQ(t.labels()[i], equal ? kPositiveLabel : kNegativeLabel);
    }
    EXPECT_EQ(pairs.size(), n);
  }
  EXPECT_THROW(gen_combination_sweep(0, 1, 0), tbc::Error);
}
