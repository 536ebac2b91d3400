#include "tbc/num/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "tbc/error.hpp"

namespace tbc::num {

Tensor2::Tensor2(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error("tensor data length does not match its shape");
}

Tensor2::Tensor2(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged initializer for Tensor2");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Tensor2 Tensor2::identity(std::size_t n) {
  Tensor2 out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

void Tensor2::fill(double value) noexcept { std::fill(data_.begin(), data_.end(), value); }

Vector affine(std::span<const double> x, const Tensor2& w, std::span<const double> b) {
  if (w.cols() != x.size() || w.rows() != b.size()) {
    throw Error("affine: shape mismatch (W is " + std::to_string(w.rows()) + "x" +
                std::to_string(w.cols()) + ", x has " + std::to_string(x.size()) + ", b has " +
                std::to_string(b.size()) + ")");
  }
  Vector y(b.begin(), b.end());
  gemv_accumulate(w, x, y);
  return y;
}

void gemv_accumulate(const Tensor2& w, std::span<const double> x, std::span<double> y) noexcept {
  assert(w.cols() == x.size() && w.rows() == y.size());
  const std::size_t cols = w.cols();
  const double* p = w.data().data();
  for (std::size_t r = 0; r < w.rows(); ++r, p += cols) {
    double acc = 0.0;
    for (std::size_t c = 0; c < cols; ++c) acc += p[c] * x[c];
    y[r] += acc;
  }
}

void gemv_transpose_accumulate(const Tensor2& w, std::span<const double> x, std::span<double> y) noexcept {
  assert(w.rows() == x.size() && w.cols() == y.size());
  const std::size_t cols = w.cols();
  const double* p = w.data().data();
  for (std::size_t r = 0; r < w.rows(); ++r, p += cols) {
    const double xr = x[r];
    for (std::size_t c = 0; c < cols; ++c) y[c] += p[c] * xr;
  }
}

void outer_accumulate(Tensor2& w, std::span<const double> a, std::span<const double> b) noexcept {
  assert(w.rows() == a.size() && w.cols() == b.size());
  const std::size_t cols = w.cols();
  double* p = w.data().data();
  for (std::size_t r = 0; r < w.rows(); ++r, p += cols) {
    const double ar = a[r];
    for (std::size_t c = 0; c < cols; ++c) p[c] += ar * b[c];
  }
}

bool all_finite(std::span<const double> values) noexcept {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace tbc::num
