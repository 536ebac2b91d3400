#pragma once

#include <functional>
#include <span>

namespace tbc::num {

using LossFunction = std::function<double(std::span<const double>)>;

/// Compares `analytic` with the fourth-order central difference
///   (8 (f(p+h) - f(p-h)) - (f(p+2h) - f(p-2h))) / 12h
/// taken coordinate by coordinate, and returns the largest relative error
/// using max(|analytic|, |numeric|, 1e-8) as the denominator.
///
/// The O(h^4) stencil allows a step large enough that rounding in f stays
/// well below 1e-4 relative error even for gradients near 1e-9, where the
/// plain two-point difference at h = 1e-5 cannot resolve them.
///
/// Throws tbc::Error for h <= 0, size mismatches, or a non-finite loss.
double finite_diff_check(const LossFunction& loss, std::span<const double> params,
                         std::span<const double> analytic, double h = 1e-3);

}  // namespace tbc::num
