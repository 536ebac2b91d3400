#include "tbc/num/gradient_check.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tbc/error.hpp"

namespace tbc::num {

double finite_diff_check(const LossFunction& loss, std::span<const double> params,
                         std::span<const double> analytic, double h) {
  if (!(h > 0.0)) throw Error("finite_diff_check: step must be positive");
  if (params.size() != analytic.size()) throw Error("finite_diff_check: gradient size mismatch");

  std::vector<double> probe(params.begin(), params.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const double saved = probe[i];
    auto at = [&](double offset) {
      probe[i] = saved + offset;
      const double value = loss(probe);
      if (!std::isfinite(value)) {
        throw Error("finite_diff_check: loss is not finite at coordinate " + std::to_string(i));
      }
      return value;
    };
    const double near = at(h) - at(-h);
    const double far = at(2.0 * h) - at(-2.0 * h);
    probe[i] = saved;
    const double numeric = (8.0 * near - far) / (12.0 * h);
    const double denom = std::max({std::abs(analytic[i]), std::abs(numeric), 1e-8});
    worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
  }
  return worst;
}

}  // namespace tbc::num
