#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tbc/data/table.hpp"

namespace tbc::experiments {

struct SizeSweepConfig {
  std::vector<std::size_t> combinations{100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
  std::size_t rows_per_combination = 1;
  double positive_probability = 0.5;
  std::uint64_t seed = 0;
};

struct SizePoint {
  std::size_t combinations = 0;
  std::size_t rows = 0;
  std::size_t node_count = 0;
  std::size_t leaf_count = 0;
  std::size_t depth = 0;
  double train_accuracy = 0.0;
};

/// Fits an unpruned tree on a combination sweep table for each grid value.
std::vector<SizePoint> run_size_sweep(const SizeSweepConfig& config);

/// Depth grid of the pruning curve; the trailing empty entry means unlimited.
std::vector<std::optional<std::size_t>> default_depth_grid();

struct PrunePoint {
  std::optional<std::size_t> max_depth;
  double train_accuracy = 0.0;
  std::size_t node_count = 0;
  std::size_t depth = 0;
};

/// Training accuracy of a depth-capped tree on `train` for each depth.
std::vector<PrunePoint> run_prune_sweep(const data::Table& train,
                                        std::span<const std::optional<std::size_t>> depths);

/// Sample Pearson correlation. Throws tbc::Error for mismatched or short input.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace tbc::experiments
