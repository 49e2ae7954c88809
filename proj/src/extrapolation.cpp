#include "fluxcomm/extrapolation.hpp"

#include "fluxcomm/types.hpp"

#include <cmath>
#include <limits>

namespace fluxcomm {

Extrapolation richardson(std::span<const double> steps, std::span<const double> values) {
  const std::size_t m = steps.size();
  if (m != values.size()) throw InvalidInput("richardson: steps and values differ in length");
  if (m < 2) throw InvalidInput("richardson: need at least two samples");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(steps[i] > 0.0) || !std::isfinite(steps[i])) {
      throw InvalidInput("richardson: steps must be positive and finite");
    }
    if (i > 0 && !(steps[i] < steps[i - 1])) {
      throw InvalidInput("richardson: steps must be strictly decreasing");
    }
    if (!std::isfinite(values[i])) throw InvalidInput("richardson: value is not finite");
  }

  Extrapolation out;
  out.tableau.emplace_back(values.begin(), values.end());
  for (std::size_t k = 1; k < m; ++k) {
    const auto& prev = out.tableau.back();
    std::vector<double> col(m - k);
    for (std::size_t i = 0; i + k < m; ++i) {
      // Neville step: polynomial in h through samples i..i+k, evaluated at h = 0.
      col[i] = (steps[i] * prev[i + 1] - steps[i + k] * prev[i]) / (steps[i] - steps[i + k]);
    }
    out.tableau.push_back(std::move(col));
  }
  out.estimate = out.tableau[m - 1][0];
  out.residual = std::abs(out.estimate - out.tableau[m - 2][1]);

  out.observed_order = std::numeric_limits<double>::quiet_NaN();
  if (m >= 3) {
    const double d0 = values[m - 3] - values[m - 2];
    const double d1 = values[m - 2] - values[m - 1];
    if (d0 != 0.0 && d1 != 0.0) {
      out.observed_order = std::log(std::abs(d0 / d1)) / std::log(steps[m - 3] / steps[m - 2]);
    }
  }
  return out;
}

}  // namespace fluxcomm
