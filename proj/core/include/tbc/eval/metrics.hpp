#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace tbc::eval {

/// K x K counts; entry (t, p) is the number of instances of true class t
/// predicted as class p.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::size_t classes) : classes_(classes), counts_(classes * classes, 0) {}

  std::size_t classes() const noexcept { return classes_; }
  std::size_t operator()(std::size_t truth, std::size_t predicted) const noexcept {
    return counts_[truth * classes_ + predicted];
  }
  /// Throws tbc::Error for an index outside 0..K-1.
  void add(std::size_t truth, std::size_t predicted, std::size_t count = 1);
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);

  std::size_t total() const noexcept;
  std::size_t trace() const noexcept;
  std::size_t row_total(std::size_t truth) const noexcept;
  std::size_t column_total(std::size_t predicted) const noexcept;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  std::size_t classes_ = 0;
  std::vector<std::size_t> counts_;
};

/// Throws tbc::Error when the spans differ in length or an index is >= classes.
ConfusionMatrix confusion(std::span<const std::size_t> truth, std::span<const std::size_t> predicted,
                          std::size_t classes);

struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Accuracy plus precision and recall of `positive` against the other class.
/// Zero denominators give 0. Throws tbc::Error unless the matrix is 2 x 2.
Metrics binary_metrics(const ConfusionMatrix& cm, std::size_t positive);

/// One-vs-rest precision and recall of class `c`, for any K.
Metrics class_metrics(const ConfusionMatrix& cm, std::size_t c);

/// Pooled precision and recall. For single-label data every false positive
/// is someone else's false negative, so all three equal trace / total.
/// Throws tbc::Error for a matrix with fewer than two classes.
Metrics micro_metrics(const ConfusionMatrix& cm);

template <typename T>
struct Timed {
  T value;
  double seconds;
};

template <>
struct Timed<void> {
  double seconds;
};

/// Runs `fn` and measures it with the steady clock.
template <typename F>
auto timed(F&& fn) {
  using R = std::invoke_result_t<F>;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  if constexpr (std::is_void_v<R>) {
    std::forward<F>(fn)();
    return Timed<void>{elapsed()};
  } else {
    R value = std::forward<F>(fn)();
    const double seconds = elapsed();
    return Timed<R>{std::move(value), seconds};
  }
}

}  // namespace tbc::eval
