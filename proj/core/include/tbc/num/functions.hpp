#pragma once

#include <cstddef>
#include <span>

#include "tbc/num/tensor.hpp"

namespace tbc::num {

/// Lower bound applied to the target probability inside cross_entropy.
inline constexpr double kProbabilityFloor = 1e-12;

double sigmoid(double x) noexcept;

Vector sigmoid(std::span<const double> x);
Vector tanh(std::span<const double> x);

/// Max-subtracted softmax; never overflows for finite input.
Vector softmax(std::span<const double> logits);
void softmax_inplace(std::span<double> logits) noexcept;

/// -log(max(p[target], 1e-12)). Throws tbc::Error for an out-of-range target.
double cross_entropy(std::span<const double> probabilities, std::size_t target);

/// Index of the largest entry; ties resolve to the lowest index.
std::size_t argmax(std::span<const double> values);

}  // namespace tbc::num
