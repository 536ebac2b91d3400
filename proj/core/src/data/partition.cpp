#include "tbc/data/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tbc/error.hpp"

namespace tbc::data {

namespace {

std::vector<std::size_t> shuffled_range(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

SplitIndices split_indices(std::size_t rows, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("test fraction must lie in the open interval (0, 1)");
  }
  if (rows == 0) throw Error("cannot split an empty table");

  const auto order = shuffled_range(rows, seed);
  const auto n_test = static_cast<std::size_t>(std::llround(static_cast<double>(rows) * test_fraction));

  SplitIndices out;
  out.test.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
  out.train.assign(order.begin() + static_cast<std::ptrdiff_t>(n_test), order.end());
  std::sort(out.test.begin(), out.test.end());
  std::sort(out.train.begin(), out.train.end());
  return out;
}

std::pair<Table, Table> split_train_test(const Table& table, double test_fraction, std::uint64_t seed) {
  const auto idx = split_indices(table.size(), test_fraction, seed);
  return {table.subset(idx.train), table.subset(idx.test)};
}

FoldPlan::FoldPlan(std::size_t k, std::vector<std::size_t> assignments, std::uint64_t seed)
    : k_(k), assignments_(std::move(assignments)), seed_(seed) {
  if (k_ < 2) throw Error("fold count must be at least 2");
  for (auto a : assignments_) {
    if (a >= k_) throw Error("fold assignment out of range");
  }
}

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
  if (fold >= k_) throw Error("fold index out of range");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    if (assignments_[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
  if (fold >= k_) throw Error("fold index out of range");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    if (assignments_[i] != fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::fold_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (auto a : assignments_) ++sizes[a];
  return sizes;
}

FoldPlan make_folds(std::size_t rows, std::size_t k, std::uint64_t seed) {
  if (k < 2 || k > rows) {
    throw Error("fold count " + std::to_string(k) + " out of range for " + std::to_string(rows) + " rows");
  }
  const auto order = shuffled_range(rows, seed);
  std::vector<std::size_t> assignments(rows);
  for (std::size_t pos = 0; pos < rows; ++pos) assignments[order[pos]] = pos % k;
  return FoldPlan(k, std::move(assignments), seed);
}

FoldPlan make_folds(const Table& table, std::size_t k, std::uint64_t seed) {
  return make_folds(table.size(), k, seed);
}

}  // namespace tbc::data
