#include "tbc/experiments/tree_analysis.hpp"

#include <cmath>

#include "tbc/baselines/tree.hpp"
#include "tbc/data/one_hot.hpp"
#include "tbc/error.hpp"
#include "tbc/synth/tasks.hpp"

namespace tbc::experiments {

namespace {

double accuracy(std::span<const std::size_t> truth, std::span<const std::size_t> predicted) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) hits += truth[i] == predicted[i];
  return truth.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(truth.size());
}

data::ClassDictionary binary_classes() {
  const std::vector<std::string> names{std::string(synth::kNegativeLabel), std::string(synth::kPositiveLabel)};
  return data::ClassDictionary(names);
}

}  // namespace

std::vector<SizePoint> run_size_sweep(const SizeSweepConfig& config) {
  const auto classes = binary_classes();
  std::vector<SizePoint> points;
  for (auto n : config.combinations) {
    const auto table =
        synth::gen_combination_sweep(n, config.rows_per_combination, config.seed, config.positive_probability);
    const auto encoded = data::one_hot_encode(table);
    const auto y = classes.encode(table.labels());
    const auto tree = baselines::dt_fit(encoded.matrix, y, classes.size());
    points.push_back({n, table.size(), tree.node_count(), tree.leaf_count(), tree.depth(),
                      accuracy(y, tree.predict(encoded.matrix))});
  }
  return points;
}

std::vector<std::optional<std::size_t>> default_depth_grid() {
  return {1, 2, 5, 10, 25, 50, 75, 100, 150, 200, 250, 300, 400, 500, std::nullopt};
}

std::vector<PrunePoint> run_prune_sweep(const data::Table& train,
                                        std::span<const std::optional<std::size_t>> depths) {
  const auto classes = data::ClassDictionary::from_table(train);
  const auto encoded = data::one_hot_encode(train);
  const auto y = classes.encode(train.labels());
  std::vector<PrunePoint> points;
  for (const auto& depth : depths) {
    baselines::TreeConfig config;
    config.max_depth = depth;
    const auto tree = baselines::dt_fit(encoded.matrix, y, classes.size(), config);
    points.push_back({depth, accuracy(y, tree.predict(encoded.matrix)), tree.node_count(), tree.depth()});
  }
  return points;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw Error("pearson needs two equal-length series of length >= 2");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace tbc::experiments
