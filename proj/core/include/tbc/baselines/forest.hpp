#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tbc/baselines/tree.hpp"

namespace tbc::baselines {

struct ForestConfig {
  std::size_t n_trees = 100;
  /// Defaults to ceil(sqrt(d)) when empty.
  std::optional<std::size_t> features_per_split;
  bool bootstrap = true;
  std::uint64_t seed = 0;
  TreeConfig tree;

  void validate() const;
};

class RandomForest {
 public:
  RandomForest() = default;
  RandomForest(std::vector<DecisionTree> trees, std::size_t classes);

  const std::vector<DecisionTree>& trees() const noexcept { return trees_; }
  std::size_t class_count() const noexcept { return classes_; }
  std::size_t total_nodes() const noexcept;

  /// Plurality vote; ties go to the lower class index.
  std::size_t predict(std::span<const double> x) const;
  std::vector<std::size_t> predict(const num::Tensor2& X) const;

 private:
  std::vector<DecisionTree> trees_;
  std::size_t classes_ = 0;
};

/// Bagged CART trees with per-split feature subsampling. Tree t draws its
/// bootstrap sample and feature choices from a generator seeded by (seed, t).
RandomForest rf_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                    const ForestConfig& config = {});
std::size_t rf_predict(const RandomForest& forest, std::span<const double> x);

}  // namespace tbc::baselines
