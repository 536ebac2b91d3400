#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tbc/num/tensor.hpp"

namespace tbc::baselines {

struct TreeConfig {
  /// Unbounded when empty. Depth counts edges from the root (a stump has depth 1).
  std::optional<std::size_t> max_depth;
  std::size_t min_samples_split = 2;

  void validate() const;
};

/// Flat-array tree node. Internal nodes route x[feature] <= threshold to
/// `left`; leaves predict `class_index`. Every node keeps the class histogram
/// of the training rows that reached it.
struct TreeNode {
  static constexpr std::uint32_t kNoChild = UINT32_MAX;

  std::int64_t feature = -1;
  double threshold = 0.0;
  std::uint32_t left = kNoChild;
  std::uint32_t right = kNoChild;
  std::size_t class_index = 0;
  std::size_t depth = 0;
  std::vector<std::size_t> counts;

  bool is_leaf() const noexcept { return feature < 0; }
};

class DecisionTree {
 public:
  DecisionTree() = default;
  DecisionTree(std::vector<TreeNode> nodes, std::size_t features, std::size_t classes);

  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  std::size_t feature_count() const noexcept { return features_; }
  std::size_t class_count() const noexcept { return classes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept;
  std::size_t depth() const noexcept;

  /// Throws tbc::Error when x has the wrong width.
  std::size_t predict(std::span<const double> x) const;
  std::vector<std::size_t> predict(const num::Tensor2& X) const;

  /// Indented text dump, one node per line. `feature_names` may be empty.
  void dump(std::ostream& out, std::span<const std::string> feature_names = {}) const;

 private:
  std::vector<TreeNode> nodes_;
  std::size_t features_ = 0;
  std::size_t classes_ = 0;
};

/// Greedy CART with Gini impurity. Candidate thresholds are midpoints between
/// consecutive distinct sorted values; ties prefer the lower feature index,
/// then the lower threshold. Growth stops at purity, max_depth,
/// min_samples_split, or when no feature varies. Leaves predict the majority
/// class, ties to the lower index.
///
/// Throws tbc::Error for empty input, a y/X length mismatch, or labels >= classes.
DecisionTree dt_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                    const TreeConfig& config = {});

std::size_t dt_predict(const DecisionTree& tree, std::span<const double> x);
std::size_t dt_node_count(const DecisionTree& tree);

namespace detail {

/// Per-feature row order sorted by (value, row). Shared by the trees of a forest.
struct PresortedColumns {
  std::size_t rows = 0;
  std::size_t features = 0;
  std::vector<double> column_major;   ///< features x rows
  std::vector<std::uint32_t> order;   ///< features x rows

  explicit PresortedColumns(const num::Tensor2& X);
};

struct GrowOptions {
  TreeConfig tree;
  /// Non-constant features examined per split; 0 examines all of them.
  std::size_t features_per_split = 0;
  std::mt19937_64* rng = nullptr;
};

/// Grows one tree over rows weighted by integer multiplicities (bootstrap counts).
DecisionTree grow_tree(const PresortedColumns& columns, std::span<const std::size_t> y, std::size_t classes,
                       std::span<const std::uint32_t> multiplicity, const GrowOptions& options);

void check_training_data(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes);

}  // namespace detail

}  // namespace tbc::baselines
