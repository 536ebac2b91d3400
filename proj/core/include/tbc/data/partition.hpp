#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tbc/data/table.hpp"

namespace tbc::data {

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Seeded shuffle; the first round(n * test_fraction) shuffled rows form the
/// test side. Both sides keep the original row order.
SplitIndices split_indices(std::size_t rows, double test_fraction, std::uint64_t seed);

/// Throws tbc::Error for an empty table or test_fraction outside (0, 1).
std::pair<Table, Table> split_train_test(const Table& table, double test_fraction, std::uint64_t seed);

class FoldPlan {
 public:
  FoldPlan(std::size_t k, std::vector<std::size_t> assignments, std::uint64_t seed);

  std::size_t k() const noexcept { return k_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t rows() const noexcept { return assignments_.size(); }
  const std::vector<std::size_t>& assignments() const noexcept { return assignments_; }

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
  std::vector<std::size_t> fold_sizes() const;

 private:
  std::size_t k_;
  std::vector<std::size_t> assignments_;
  std::uint64_t seed_;
};

/// Balanced k-fold assignment over a seeded shuffle: fold sizes differ by at
/// most one, with the larger folds first. Requires 2 <= k <= rows.
FoldPlan make_folds(std::size_t rows, std::size_t k, std::uint64_t seed);
FoldPlan make_folds(const Table& table, std::size_t k, std::uint64_t seed);

}  // namespace tbc::data
