#pragma once

#include "fluxcomm/crossings.hpp"
#include "fluxcomm/extrapolation.hpp"
#include "fluxcomm/geom.hpp"

#include <span>
#include <utility>
#include <vector>

namespace fluxcomm {

/// Signed number of times `loop` pierces `surface`: the delta-kernel part of
/// the integrated field commutator.
int delta_kernel_integral(const TriSurface& surface, const OrientedLoop& loop);

/// One loop arc between two excised crossings.
struct ArcContribution {
  int from_crossing;
  int to_crossing;
  double start_arclength;
  double end_arclength;  // may exceed the loop length when the arc wraps
  double value;          // (phi(end) - phi(start)) / 4pi
  /// The arc leaves one crossing and reaches the next on the same side of the
  /// surface (opposite crossing signs).
  bool internal;
};

struct TransverseSample {
  double eps;
  double value;  // sum of arc values
  std::vector<ArcContribution> arcs;
  int arc_count() const { return static_cast<int>(arcs.size()); }
};

struct TransverseIntegral {
  std::vector<TransverseSample> per_eps;
  Extrapolation extrapolation;
  double extrapolated() const { return extrapolation.estimate; }
};

/// Line integral of the unit-charge flux gradient around `loop`, divided by
/// 4pi, with an arclength interval of half-width eps cut out around every
/// crossing. On each remaining arc the integral telescopes to
/// phi(end) - phi(start). Values for decreasing eps are extrapolated to 0.
///
/// eps values are absolute arclengths and must be strictly decreasing, at
/// least two of them, each below half the smallest gap between consecutive
/// crossings (below a quarter of the loop length when there is one crossing);
/// otherwise EpsTooLarge / InvalidInput.
TransverseIntegral transverse_integral(const TriSurface& surface, const OrientedLoop& loop,
                                       std::span<const double> eps_sequence);

TransverseIntegral transverse_integral(const TriSurface& surface, const OrientedLoop& loop,
                                       const CrossingSet& crossings,
                                       std::span<const double> eps_sequence);

/// Integrated commutators as real multiples of i*hbar*c.
struct CommutatorReport {
  int delta_kernel = 0;
  double transverse = 0.0;
  std::vector<std::pair<double, double>> transverse_extrapolation;  // (eps, value)
  std::vector<int> arc_counts;                                      // per eps
  double extrapolation_residual = 0.0;
  double observed_order = 0.0;
  double superconductor_units_ihc = 0.0;  // 4pi * delta_kernel
  double vacuum_units_ihc = 0.0;          // 4pi * (delta_kernel + transverse)
  double charge_flux_units_ihc = 0.0;     // -delta_kernel
};

CommutatorReport evaluate_commutators(const TriSurface& surface, const OrientedLoop& loop,
                                      std::span<const double> eps_sequence);

/// Relative slack allowed when comparing the two sides of the energy bound.
inline constexpr double kUncertaintyRelTol = 1e-12;

/// Energy form of the flux uncertainty relation in units hbar = c = 1:
/// lhs = dE*dB*l^3/(4pi) against rhs = 1/l. The flux-level form compares
/// dE*dB*l^4 with 4pi; the two are the same inequality.
struct UncertaintyCheck {
  double dE;
  double dB;
  double l;
  double lhs;
  double rhs;
  bool satisfied;
  double flux_product;  // dE*dB*l^4
  double flux_bound;    // 4pi
};

/// Throws NonpositiveInput unless all arguments are positive and finite.
UncertaintyCheck uncertainty_bound(double dE, double dB, double l);

}  // namespace fluxcomm
