#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tbc::num {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Tensor2(std::size_t rows, std::size_t cols, std::vector<double> data);
  Tensor2(std::initializer_list<std::initializer_list<double>> rows);

  static Tensor2 identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  void fill(double value) noexcept;

  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Returns w x + b. Throws tbc::Error on shape mismatch.
Vector affine(std::span<const double> x, const Tensor2& w, std::span<const double> b);

/// y += w x without bounds checks beyond debug asserts.
void gemv_accumulate(const Tensor2& w, std::span<const double> x, std::span<double> y) noexcept;
/// y += w^T x.
void gemv_transpose_accumulate(const Tensor2& w, std::span<const double> x, std::span<double> y) noexcept;
/// w += a b^T.
void outer_accumulate(Tensor2& w, std::span<const double> a, std::span<const double> b) noexcept;

bool all_finite(std::span<const double> values) noexcept;

}  // namespace tbc::num
