#include "tbc/baselines/tree.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "tbc/error.hpp"

namespace tbc::baselines {

void TreeConfig::validate() const {
  if (max_depth && *max_depth < 1) throw Error("max_depth must be at least 1 when set");
  if (min_samples_split < 2) throw Error("min_samples_split must be at least 2");
}

DecisionTree::DecisionTree(std::vector<TreeNode> nodes, std::size_t features, std::size_t classes)
    : nodes_(std::move(nodes)), features_(features), classes_(classes) {
  if (nodes_.empty()) throw Error("a decision tree needs at least one node");
}

std::size_t DecisionTree::leaf_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

std::size_t DecisionTree::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.depth);
  return d;
}

std::size_t DecisionTree::predict(std::span<const double> x) const {
  if (x.size() != features_) {
    throw Error("tree expects " + std::to_string(features_) + " features, got " + std::to_string(x.size()));
  }
  std::uint32_t at = 0;
  while (!nodes_[at].is_leaf()) {
    const auto& n = nodes_[at];
    at = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return nodes_[at].class_index;
}

std::vector<std::size_t> DecisionTree::predict(const num::Tensor2& X) const {
  std::vector<std::size_t> out(X.rows());
  for (std::size_t r = 0; r < X.rows(); ++r) out[r] = predict(X.row(r));
  return out;
}

void DecisionTree::dump(std::ostream& out, std::span<const std::string> feature_names) const {
  auto print_counts = [&](const TreeNode& n) {
    out << '[';
    for (std::size_t k = 0; k < n.counts.size(); ++k) out << (k ? "," : "") << n.counts[k];
    out << ']';
  };
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    const auto& n = nodes_[id];
    out << std::string(2 * n.depth, ' ');
    if (n.is_leaf()) {
      out << "leaf class=" << n.class_index << " counts=";
      print_counts(n);
      out << '\n';
      continue;
    }
    const auto f = static_cast<std::size_t>(n.feature);
    out << "split feature=" << f;
    if (f < feature_names.size()) out << " (" << feature_names[f] << ')';
    out << " threshold=" << n.threshold << " counts=";
    print_counts(n);
    out << '\n';
    stack.push_back(n.right);
    stack.push_back(n.left);
  }
}

DecisionTree dt_fit(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes,
                    const TreeConfig& config) {
  config.validate();
  detail::check_training_data(X, y, classes);
  const detail::PresortedColumns columns(X);
  const std::vector<std::uint32_t> ones(X.rows(), 1);
  return detail::grow_tree(columns, y, classes, ones, {config, 0, nullptr});
}

std::size_t dt_predict(const DecisionTree& tree, std::span<const double> x) { return tree.predict(x); }

std::size_t dt_node_count(const DecisionTree& tree) { return tree.node_count(); }

namespace detail {

void check_training_data(const num::Tensor2& X, std::span<const std::size_t> y, std::size_t classes) {
  if (X.rows() == 0 || X.cols() == 0) throw Error("training matrix is empty");
  if (y.size() != X.rows()) {
    throw Error("label count " + std::to_string(y.size()) + " does not match " + std::to_string(X.rows()) + " rows");
  }
  if (classes == 0) throw Error("class count must be positive");
  for (auto label : y) {
    if (label >= classes) throw Error("label " + std::to_string(label) + " out of range");
  }
}

PresortedColumns::PresortedColumns(const num::Tensor2& X)
    : rows(X.rows()), features(X.cols()), column_major(X.rows() * X.cols()), order(X.rows() * X.cols()) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < features; ++j) column_major[j * rows + r] = X(r, j);
  }
  for (std::size_t j = 0; j < features; ++j) {
    const double* col = column_major.data() + j * rows;
    auto* ord = order.data() + j * rows;
    std::iota(ord, ord + rows, std::uint32_t{0});
    std::stable_sort(ord, ord + rows, [col](std::uint32_t a, std::uint32_t b) { return col[a] < col[b]; });
  }
}

namespace {

struct Split {
  bool found = false;
  double score = 0.0;
  std::size_t feature = 0;
  double threshold = 0.0;
  std::size_t left_size = 0;

  bool worse_than(double s, std::size_t f, double t) const {
    if (!found || s > score) return true;
    if (s < score) return false;
    return f < feature || (f == feature && t < threshold);
  }
};

class Grower {
 public:
  Grower(const PresortedColumns& cols, std::span<const std::size_t> y, std::size_t classes,
         std::span<const std::uint32_t> multiplicity, const GrowOptions& options)
      : cols_(cols), y_(y), classes_(classes), options_(options) {
    // Expand each row into one slot per copy, then lay out every feature's
    // slots in presorted value order.
    for (std::size_t r = 0; r < cols.rows; ++r) {
      for (std::uint32_t m = 0; m < multiplicity[r]; ++m) slot_row_.push_back(static_cast<std::uint32_t>(r));
    }
    slots_ = slot_row_.size();
    if (slots_ == 0) throw Error("tree has no training rows");
    std::vector<std::uint32_t> first_slot(cols.rows + 1, 0);
    for (std::size_t r = 0; r < cols.rows; ++r) first_slot[r + 1] = first_slot[r] + multiplicity[r];

    order_.resize(cols.features * slots_);
    values_.resize(cols.features * slots_);
    for (std::size_t j = 0; j < cols.features; ++j) {
      std::size_t k = j * slots_;
      const auto* sorted_rows = cols.order.data() + j * cols.rows;
      const auto* col = cols.column_major.data() + j * cols.rows;
      for (std::size_t i = 0; i < cols.rows; ++i) {
        const auto r = sorted_rows[i];
        for (auto s = first_slot[r]; s < first_slot[r + 1]; ++s, ++k) {
          order_[k] = s;
          values_[k] = col[r];
        }
      }
    }
    goes_left_.assign(slots_, 0);
    scratch_order_.resize(slots_);
    scratch_values_.resize(slots_);
    features_.resize(cols.features);
    std::iota(features_.begin(), features_.end(), std::size_t{0});
  }

  DecisionTree grow() {
    struct Pending {
      std::uint32_t node;
      std::size_t begin, end, depth;
    };
    nodes_.emplace_back();
    std::vector<Pending> stack{{0, 0, slots_, 0}};
    std::vector<std::size_t> counts(classes_);

    while (!stack.empty()) {
      const auto p = stack.back();
      stack.pop_back();
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t k = p.begin; k < p.end; ++k) ++counts[y_[slot_row_[order_[k]]]];

      auto& node = nodes_[p.node];
      node.depth = p.depth;
      node.counts = counts;
      node.class_index = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());

      const auto n = p.end - p.begin;
      const bool pure = counts[node.class_index] == n;
      const bool depth_capped = options_.tree.max_depth && p.depth >= *options_.tree.max_depth;
      if (pure || depth_capped || n < options_.tree.min_samples_split) continue;

      const auto split = best_split(p.begin, p.end, counts);
      if (!split.found) continue;

      const auto left_id = static_cast<std::uint32_t>(nodes_.size());
      nodes_[p.node].feature = static_cast<std::int64_t>(split.feature);
      nodes_[p.node].threshold = split.threshold;
      nodes_[p.node].left = left_id;
      nodes_[p.node].right = left_id + 1;
      nodes_.emplace_back();
      nodes_.emplace_back();

      partition(p.begin, p.end, split);
      const auto mid = p.begin + split.left_size;
      stack.push_back({left_id + 1, mid, p.end, p.depth + 1});
      stack.push_back({left_id, p.begin, mid, p.depth + 1});
    }
    return DecisionTree(std::move(nodes_), cols_.features, classes_);
  }

 private:
  Split best_split(std::size_t begin, std::size_t end, const std::vector<std::size_t>& counts) {
    Split best;
    const auto n = end - begin;
    double total_sq = 0.0;
    for (auto c : counts) total_sq += static_cast<double>(c) * static_cast<double>(c);

    const bool sampled = options_.features_per_split > 0 && options_.features_per_split < cols_.features;
    if (sampled) std::shuffle(features_.begin(), features_.end(), *options_.rng);

    std::size_t examined = 0;
    std::vector<double> left(classes_);
    std::vector<double> right(classes_);
    for (auto j : features_) {
      if (sampled && examined >= options_.features_per_split) break;
      const double* vals = values_.data() + j * slots_;
      const std::uint32_t* ord = order_.data() + j * slots_;
      if (vals[begin] == vals[end - 1]) continue;
      ++examined;

      std::fill(left.begin(), left.end(), 0.0);
      for (std::size_t k = 0; k < classes_; ++k) right[k] = static_cast<double>(counts[k]);
      double left_sq = 0.0;
      double right_sq = total_sq;
      for (std::size_t i = begin; i + 1 < end; ++i) {
        const auto c = y_[slot_row_[ord[i]]];
        left_sq += 2.0 * left[c] + 1.0;
        right_sq -= 2.0 * right[c] - 1.0;
        left[c] += 1.0;
        right[c] -= 1.0;
        if (!(vals[i] < vals[i + 1])) continue;
        const auto n_left = static_cast<double>(i - begin + 1);
        const auto n_right = static_cast<double>(n) - n_left;
        // Maximising sum(c_L^2)/n_L + sum(c_R^2)/n_R minimises weighted Gini.
        const double score = left_sq / n_left + right_sq / n_right;
        double threshold = 0.5 * (vals[i] + vals[i + 1]);
        if (!(threshold < vals[i + 1])) threshold = vals[i];
        if (best.worse_than(score, j, threshold)) {
          best = {true, score, j, threshold, i - begin + 1};
        }
      }
    }
    return best;
  }

  void partition(std::size_t begin, std::size_t end, const Split& split) {
    const double* vals = values_.data() + split.feature * slots_;
    const std::uint32_t* ord = order_.data() + split.feature * slots_;
    for (std::size_t k = begin; k < end; ++k) goes_left_[ord[k]] = vals[k] <= split.threshold ? 1 : 0;

    for (std::size_t j = 0; j < cols_.features; ++j) {
      auto* o = order_.data() + j * slots_;
      auto* v = values_.data() + j * slots_;
      std::size_t l = begin;
      std::size_t r = 0;
      for (std::size_t k = begin; k < end; ++k) {
        if (goes_left_[o[k]]) {
          o[l] = o[k];
          v[l] = v[k];
          ++l;
        } else {
          scratch_order_[r] = o[k];
          scratch_values_[r] = v[k];
          ++r;
        }
      }
      std::copy_n(scratch_order_.begin(), r, o + l);
      std::copy_n(scratch_values_.begin(), r, v + l);
    }
  }

  const PresortedColumns& cols_;
  std::span<const std::size_t> y_;
  std::size_t classes_;
  GrowOptions options_;

  std::size_t slots_ = 0;
  std::vector<std::uint32_t> slot_row_;
  std::vector<std::uint32_t> order_;
  std::vector<double> values_;
  std::vector<std::uint8_t> goes_left_;
  std::vector<std::uint32_t> scratch_order_;
  std::vector<double> scratch_values_;
  std::vector<std::size_t> features_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

DecisionTree grow_tree(const PresortedColumns& columns, std::span<const std::size_t> y, std::size_t classes,
                       std::span<const std::uint32_t> multiplicity, const GrowOptions& options) {
  options.tree.validate();
  if (multiplicity.size() != columns.rows) throw Error("multiplicity vector does not match row count");
  if (options.features_per_split > 0 && options.rng == nullptr) {
    throw Error("feature subsampling needs a random generator");
  }
  Grower grower(columns, y, classes, multiplicity, options);
  return grower.grow();
}

}  // namespace detail

}  // namespace tbc::baselines
