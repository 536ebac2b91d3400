#include "tbc/eval/metrics.hpp"

#include <string>

#include "tbc/error.hpp"

namespace tbc::eval {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void ConfusionMatrix::add(std::size_t truth, std::size_t predicted, std::size_t count) {
  if (truth >= classes_ || predicted >= classes_) {
    throw Error("confusion index out of range: (" + std::to_string(truth) + ", " + std::to_string(predicted) +
                ") with " + std::to_string(classes_) + " classes");
  }
  counts_[truth * classes_ + predicted] += count;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  if (other.classes_ != classes_) throw Error("cannot add confusion matrices of different sizes");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

std::size_t ConfusionMatrix::total() const noexcept {
  std::size_t n = 0;
  for (auto c : counts_) n += c;
  return n;
}

std::size_t ConfusionMatrix::trace() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < classes_; ++i) n += (*this)(i, i);
  return n;
}

std::size_t ConfusionMatrix::row_total(std::size_t truth) const noexcept {
  std::size_t n = 0;
  for (std::size_t j = 0; j < classes_; ++j) n += (*this)(truth, j);
  return n;
}

std::size_t ConfusionMatrix::column_total(std::size_t predicted) const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < classes_; ++i) n += (*this)(i, predicted);
  return n;
}

ConfusionMatrix confusion(std::span<const std::size_t> truth, std::span<const std::size_t> predicted,
                          std::size_t classes) {
  if (truth.size() != predicted.size()) {
    throw Error("confusion: " + std::to_string(truth.size()) + " labels but " + std::to_string(predicted.size()) +
                " predictions");
  }
  ConfusionMatrix cm(classes);
  for (std::size_t i = 0; i < truth.size(); ++i) cm.add(truth[i], predicted[i]);
  return cm;
}

Metrics class_metrics(const ConfusionMatrix& cm, std::size_t c) {
  if (c >= cm.classes()) throw Error("class index out of range");
  const auto tp = cm(c, c);
  return {ratio(cm.trace(), cm.total()), ratio(tp, cm.column_total(c)), ratio(tp, cm.row_total(c))};
}

Metrics binary_metrics(const ConfusionMatrix& cm, std::size_t positive) {
  if (cm.classes() != 2) throw Error("binary metrics need a 2 x 2 confusion matrix");
  return class_metrics(cm, positive);
}

Metrics micro_metrics(const ConfusionMatrix& cm) {
  if (cm.classes() < 2) throw Error("micro metrics need at least two classes");
  // Pooled TP is the trace; pooled TP+FP and TP+FN are both the total.
  std::size_t tp = 0;
  std::size_t predicted = 0;
  std::size_t actual = 0;
  for (std::size_t c = 0; c < cm.classes(); ++c) {
    tp += cm(c, c);
    predicted += cm.column_total(c);
    actual += cm.row_total(c);
  }
  return {ratio(cm.trace(), cm.total()), ratio(tp, predicted), ratio(tp, actual)};
}

}  // namespace tbc::eval
