#pragma once

#include <span>
#include <vector>

namespace fluxcomm {

/// Richardson extrapolation to step -> 0 for values with an error expansion
/// c1*h + c2*h^2 + ... . Each tableau column removes one more power of h, so
/// arbitrary (not just halving) step sequences are accepted.
struct Extrapolation {
  double estimate = 0.0;
  /// |estimate - best estimate built without the coarsest sample|. With two
  /// samples that is |estimate - finest sample|.
  double residual = 0.0;
  /// Convergence order fitted from the three finest raw samples; NaN with fewer.
  double observed_order = 0.0;
  /// tableau[k][i] eliminates powers 1..k using samples i..i+k.
  std::vector<std::vector<double>> tableau;
};

/// Throws InvalidInput unless there are >= 2 samples, steps are positive,
/// finite and strictly decreasing, and sizes match.
Extrapolation richardson(std::span<const double> steps, std::span<const double> values);

}  // namespace fluxcomm
