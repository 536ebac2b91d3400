#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "tbc/data/table.hpp"

namespace tbc::synth {

enum class TaskKind { string_equivalence, substring_match, odd_number };

std::string_view to_string(TaskKind kind) noexcept;
TaskKind parse_task_kind(std::string_view name);

inline constexpr std::string_view kPositiveLabel = "1";
inline constexpr std::string_view kNegativeLabel = "0";

struct TaskSpec {
  TaskKind kind = TaskKind::string_equivalence;
  std::size_t train_rows = 1000;
  std::size_t test_rows = 500;
  double positive_probability = 0.5;
  std::uint64_t seed = 0;
  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::size_t min_word_length = 3;
  std::size_t max_word_length = 10;
  double min_value = 0.0;
  double max_value = 9999.0;

  /// Row counts and probabilities of the controlled experiments for `kind`:
  /// 1000/500 rows for the string tasks, 800/200 for odd numbers.
  static TaskSpec defaults(TaskKind kind, std::uint64_t seed = 0);

  /// Throws tbc::Error when p is outside [0, 1], a row count is zero, the
  /// alphabet is empty, or a range is empty.
  void validate() const;
};

using Rng = std::mt19937_64;

/// i.i.d. uniform characters from `alphabet`, length uniform in [min_len, max_len].
std::string random_word(std::string_view alphabet, std::size_t min_len, std::size_t max_len, Rng& rng);

/// Two text columns; with probability p the second copies the first.
/// Label "1" iff the two values are equal.
std::pair<data::Table, data::Table> gen_string_equivalence(const TaskSpec& spec);

/// Two text columns; with probability p the second is a random contiguous
/// substring (length >= 1) of the first. Label "1" iff either value contains
/// the other.
std::pair<data::Table, data::Table> gen_substring(const TaskSpec& spec);

/// One numeric column drawn from U(min, max) and rounded to 3 decimals;
/// label "1" iff floor(value) is odd. train_rows + test_rows values are drawn
/// and split at random.
std::pair<data::Table, data::Table> gen_odd_numbers(const TaskSpec& spec);

/// Dispatches on spec.kind.
std::pair<data::Table, data::Table> generate(const TaskSpec& spec);

/// String-equivalence style table with exactly `n_combinations` distinct
/// (first, second) pairs, each repeated `rows_per_combination` times.
data::Table gen_combination_sweep(std::size_t n_combinations, std::size_t rows_per_combination,
                                  std::uint64_t seed, double positive_probability = 0.5);

/// Label predicates, exposed for tests and reports.
bool is_odd_floor(double value);
bool either_contains(std::string_view a, std::string_view b);

data::Schema two_text_schema();
data::Schema one_number_schema();

}  // namespace tbc::synth
