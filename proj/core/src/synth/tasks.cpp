#include "tbc/synth/tasks.hpp"

#include <cmath>
#include <set>

#include "tbc/data/partition.hpp"
#include "tbc/error.hpp"

namespace tbc::synth {

namespace {

using data::FeatureValue;
using data::Row;

std::string label_for(bool positive) { return std::string(positive ? kPositiveLabel : kNegativeLabel); }

// Independent streams for train and test so changing one row count leaves
// the other table untouched.
Rng stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return Rng(seq);
}

template <typename MakeRow>
data::Table build(const data::Schema& schema, std::size_t rows, Rng& rng, MakeRow make_row) {
  std::vector<Row> out_rows;
  std::vector<std::string> labels;
  out_rows.reserve(rows);
  labels.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    auto [row, positive] = make_row(rng);
    out_rows.push_back(std::move(row));
    labels.push_back(label_for(positive));
  }
  return data::Table(schema, std::move(out_rows), std::move(labels));
}

void expect_kind(const TaskSpec& spec, TaskKind kind) {
  spec.validate();
  if (spec.kind != kind) {
    throw Error("task spec is for " + std::string(to_string(spec.kind)) + ", not " + std::string(to_string(kind)));
  }
}

}  // namespace

std::string_view to_string(TaskKind kind) noexcept {
  switch (kind) {
    case TaskKind::string_equivalence:
      return "string_equivalence";
    case TaskKind::substring_match:
      return "substring_match";
    case TaskKind::odd_number:
      break;
  }
  return "odd_number";
}

TaskKind parse_task_kind(std::string_view name) {
  for (auto k : {TaskKind::string_equivalence, TaskKind::substring_match, TaskKind::odd_number}) {
    if (to_string(k) == name) return k;
  }
  throw Error("unknown task '" + std::string(name) + "'");
}

TaskSpec TaskSpec::defaults(TaskKind kind, std::uint64_t seed) {
  TaskSpec s;
  s.kind = kind;
  s.seed = seed;
  if (kind == TaskKind::odd_number) {
    s.train_rows = 800;
    s.test_rows = 200;
  }
  return s;
}

void TaskSpec::validate() const {
  if (!(positive_probability >= 0.0 && positive_probability <= 1.0)) {
    throw Error("positive probability must lie in [0, 1]");
  }
  if (train_rows == 0 || test_rows == 0) throw Error("row counts must be at least 1");
  if (alphabet.empty()) throw Error("word alphabet is empty");
  if (min_word_length == 0 || max_word_length < min_word_length) throw Error("word length range is empty");
  if (!(max_value > min_value) || !std::isfinite(min_value) || !std::isfinite(max_value)) {
    throw Error("numeric range is empty");
  }
}

std::string random_word(std::string_view alphabet, std::size_t min_len, std::size_t max_len, Rng& rng) {
  if (alphabet.empty()) throw Error("random_word: empty alphabet");
  if (min_len == 0 || max_len < min_len) throw Error("random_word: invalid length range");
  std::uniform_int_distribution<std::size_t> length(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string word(length(rng), ' ');
  for (auto& ch : word) ch = alphabet[pick(rng)];
  return word;
}

data::Schema two_text_schema() {
  return data::Schema({{"first", data::ColumnKind::text},
                       {"second", data::ColumnKind::text},
                       {"label", data::ColumnKind::label}});
}

data::Schema one_number_schema() {
  return data::Schema({{"value", data::ColumnKind::numeric}, {"label", data::ColumnKind::label}});
}

bool is_odd_floor(double value) {
  const double f = std::floor(value);
  return std::fmod(std::abs(f), 2.0) == 1.0;
}

bool either_contains(std::string_view a, std::string_view b) {
  return a.find(b) != std::string_view::npos || b.find(a) != std::string_view::npos;
}

std::pair<data::Table, data::Table> gen_string_equivalence(const TaskSpec& spec) {
  expect_kind(spec, TaskKind::string_equivalence);
  auto make = [&](Rng& rng) {
    std::bernoulli_distribution plant(spec.positive_probability);
    auto first = random_word(spec.alphabet, spec.min_word_length, spec.max_word_length, rng);
    auto second = plant(rng) ? first : random_word(spec.alphabet, spec.min_word_length, spec.max_word_length, rng);
    const bool positive = first == second;
    return std::pair{Row{FeatureValue::text(std::move(first)), FeatureValue::text(std::move(second))}, positive};
  };
  auto train_rng = stream(spec.seed, 1);
  auto test_rng = stream(spec.seed, 2);
  auto train = build(two_text_schema(), spec.train_rows, train_rng, make);
  auto test = build(two_text_schema(), spec.test_rows, test_rng, make);
  return {std::move(train), std::move(test)};
}

std::pair<data::Table, data::Table> gen_substring(const TaskSpec& spec) {
  expect_kind(spec, TaskKind::substring_match);
  auto make = [&](Rng& rng) {
    std::bernoulli_distribution plant(spec.positive_probability);
    auto first = random_word(spec.alphabet, spec.min_word_length, spec.max_word_length, rng);
    std::string second;
    if (plant(rng)) {
      std::uniform_int_distribution<std::size_t> len_dist(1, first.size());
      const auto len = len_dist(rng);
      std::uniform_int_distribution<std::size_t> start_dist(0, first.size() - len);
      second = first.substr(start_dist(rng), len);
    } else {
      second = random_word(spec.alphabet, spec.min_word_length, spec.max_word_length, rng);
    }
    const bool positive = either_contains(first, second);
    return std::pair{Row{FeatureValue::text(std::move(first)), FeatureValue::text(std::move(second))}, positive};
  };
  auto train_rng = stream(spec.seed, 1);
  auto test_rng = stream(spec.seed, 2);
  auto train = build(two_text_schema(), spec.train_rows, train_rng, make);
  auto test = build(two_text_schema(), spec.test_rows, test_rng, make);
  return {std::move(train), std::move(test)};
}

std::pair<data::Table, data::Table> gen_odd_numbers(const TaskSpec& spec) {
  expect_kind(spec, TaskKind::odd_number);
  auto make = [&](Rng& rng) {
    std::uniform_real_distribution<double> dist(spec.min_value, spec.max_value);
    const double value = std::round(dist(rng) * 1000.0) / 1000.0;
    return std::pair{Row{FeatureValue::numeric(value)}, is_odd_floor(value)};
  };
  const auto total = spec.train_rows + spec.test_rows;
  auto rng = stream(spec.seed, 3);
  auto all = build(one_number_schema(), total, rng, make);
  const double fraction = static_cast<double>(spec.test_rows) / static_cast<double>(total);
  return data::split_train_test(all, fraction, spec.seed);
}

std::pair<data::Table, data::Table> generate(const TaskSpec& spec) {
  switch (spec.kind) {
    case TaskKind::string_equivalence:
      return gen_string_equivalence(spec);
    case TaskKind::substring_match:
      return gen_substring(spec);
    case TaskKind::odd_number:
      break;
  }
  return gen_odd_numbers(spec);
}

data::Table gen_combination_sweep(std::size_t n_combinations, std::size_t rows_per_combination,
                                  std::uint64_t seed, double positive_probability) {
  if (n_combinations == 0 || rows_per_combination == 0) {
    throw Error("combination sweep needs at least one combination and one row per combination");
  }
  if (!(positive_probability >= 0.0 && positive_probability <= 1.0)) {
    throw Error("positive probability must lie in [0, 1]");
  }
  const TaskSpec spec;
  auto rng = stream(seed, 4);
  std::bernoulli_distribution plant(positive_probability);
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(n_combinations);
  while (pairs.size() < n_combinations) {
    auto first = random_word(spec.alphabet, spec.min_word_length, spec.max_word_length, rng);
    auto second = plant(rng) ? first : random_word(spec.alphabet, spec.min_word_length, spec.max_word_length, rng);
    if (seen.emplace(first, second).second) pairs.emplace_back(std::move(first), std::move(second));
  }

  std::vector<Row> rows;
  std::vector<std::string> labels;
  rows.reserve(n_combinations * rows_per_combination);
  for (const auto& [first, second] : pairs) {
    for (std::size_t k = 0; k < rows_per_combination; ++k) {
      rows.push_back({FeatureValue::text(first), FeatureValue::text(second)});
      labels.push_back(label_for(first == second));
    }
  }
  return data::Table(two_text_schema(), std::move(rows), std::move(labels));
}

}  // namespace tbc::synth
