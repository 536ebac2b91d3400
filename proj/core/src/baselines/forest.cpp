#include "tbc/baselines/forest.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tbc/error.hpp"

namespace tbc::baselines {

void ForestConfig::validate() const {
  if (n_trees == 0) throw Error("a forest needs at least one tree");
  if (features_per_split && *features_per_split == 0) throw Error("features_per_split must be positive");
  tree.validate();
}

RandomForest::RandomForest(std::vector<DecisionTree> trees, std::size_t classes)
    : trees_(std::move(trees)), classes_(classes) {
  if (trees_.empty()) throw Error("a forest needs at least one tree");
}

std::size_t RandomForest::total_nodes() const noexcept {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.node_count();
  return n;
}

std::size_t RandomForest::predict(std::span<const double> x) const {
  std::vector<std::size_t> votes(classes_, 0);
  for (const auto& t : trees_) ++votes[t.predict(x)];
  return static_cast<std::size_t>(std::max_element(votes.begin(), votes.end()) - votes.begin());
}

std::vector<std::size_t> RandomForest::predict(const num::Tensor2& X) const {
  std::vector<std::size_t> out(X.rows());
  for (std::size_t r = 0; r < X.rows(); ++r) out[r] = predict(X.row(r));
  return out;
}

RandomForest rf_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                    const ForestConfig& config) {
  config.validate();
  detail::check_training_data(X, y, classes);

  const detail::PresortedColumns columns(X);
  const auto d = X.cols();
  const auto per_split = config.features_per_split.value_or(
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(d)))));

  std::vector<DecisionTree> trees;
  trees.reserve(config.n_trees);
  std::vector<std::uint32_t> multiplicity(X.rows());
  for (std::size_t t = 0; t < config.n_trees; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(t), 0x5EEDu};
    std::mt19937_64 rng(seq);

    if (config.bootstrap) {
      std::fill(multiplicity.begin(), multiplicity.end(), 0u);
      std::uniform_int_distribution<std::size_t> pick(0, X.rows() - 1);
      for (std::size_t i = 0; i < X.rows(); ++i) ++multiplicity[pick(rng)];
    } else {
      std::fill(multiplicity.begin(), multiplicity.end(), 1u);
    }
    trees.push_back(detail::grow_tree(columns, y, classes, multiplicity,
                                      {config.tree, std::min(per_split, d), &rng}));
  }
  return RandomForest(std::move(trees), classes);
}

std::size_t rf_predict(const RandomForest& forest, std::span<const double> x) { return forest.predict(x); }

}  // namespace tbc::baselines
