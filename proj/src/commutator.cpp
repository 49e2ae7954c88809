#include "fluxcomm/commutator.hpp"

#include "fluxcomm/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fluxcomm {

int delta_kernel_integral(const TriSurface& surface, const OrientedLoop& loop) {
  return signed_crossings(surface, loop).total;
}

TransverseIntegral transverse_integral(const TriSurface& surface, const OrientedLoop& loop,
                                       std::span<const double> eps_sequence) {
  return transverse_integral(surface, loop, signed_crossings(surface, loop), eps_sequence);
}

TransverseIntegral transverse_integral(const TriSurface& surface, const OrientedLoop& loop,
                                       const CrossingSet& crossings,
                                       std::span<const double> eps_sequence) {
  if (eps_sequence.size() < 2) {
    throw InvalidInput("transverse_integral: need at least two eps values to extrapolate");
  }
  const double length = loop.length();
  const auto& cs = crossings.crossings;
  const std::size_t n = cs.size();

  std::vector<double> at(n);
  for (std::size_t i = 0; i < n; ++i) at[i] = cs[i].loop_arc_parameter * length;

  double eps_limit = std::numeric_limits<double>::infinity();
  if (n == 1) {
    eps_limit = 0.25 * length;
  } else if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double gap = i + 1 < n ? at[i + 1] - at[i] : at[0] + length - at[i];
      eps_limit = std::min(eps_limit, 0.5 * gap);
    }
  }
  for (double eps : eps_sequence) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw InvalidInput("transverse_integral: eps must be positive and finite");
    }
    if (eps >= eps_limit) {
      throw EpsTooLarge("eps " + std::to_string(eps) + " must be below " +
                        std::to_string(eps_limit) + " for this scene");
    }
  }

  TransverseIntegral out;
  std::vector<double> values;
  for (double eps : eps_sequence) {
    TransverseSample sample{eps, 0.0, {}};
    if (n == 0) {
      // Nothing to excise: the closed loop telescopes to zero.
      sample.arcs.push_back(ArcContribution{-1, -1, 0.0, length, 0.0, false});
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      const double start = at[i] + eps;
      const double end = (j > i ? at[j] : at[j] + length) - eps;
      const double phi_start = point_flux(surface, loop.point_at(start)).phi;
      const double phi_end = point_flux(surface, loop.point_at(end)).phi;
      const double value = (phi_end - phi_start) / kFourPi;
      sample.arcs.push_back(ArcContribution{static_cast<int>(i), static_cast<int>(j), start, end,
                                            value, cs[i].sign != cs[j].sign});
      sample.value += value;
    }
    values.push_back(sample.value);
    out.per_eps.push_back(std::move(sample));
  }
  out.extrapolation = richardson(eps_sequence, values);
  return out;
}

CommutatorReport evaluate_commutators(const TriSurface& surface, const OrientedLoop& loop,
                                      std::span<const double> eps_sequence) {
  const CrossingSet crossings = signed_crossings(surface, loop);
  const TransverseIntegral transverse = transverse_integral(surface, loop, crossings, eps_sequence);

  CommutatorReport report;
  report.delta_kernel = crossings.total;
  report.transverse = transverse.extrapolated();
  for (const auto& s : transverse.per_eps) {
    report.transverse_extrapolation.emplace_back(s.eps, s.value);
    report.arc_counts.push_back(s.arc_count());
  }
  report.extrapolation_residual = transverse.extrapolation.residual;
  report.observed_order = transverse.extrapolation.observed_order;
  report.superconductor_units_ihc = kFourPi * report.delta_kernel;
  report.vacuum_units_ihc = kFourPi * (report.delta_kernel + report.transverse);
  report.charge_flux_units_ihc = static_cast<double>(-report.delta_kernel);
  return report;
}

UncertaintyCheck uncertainty_bound(double dE, double dB, double l) {
  for (double x : {dE, dB, l}) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw NonpositiveInput("uncertainty_bound: dE, dB and l must be positive and finite");
    }
  }
  UncertaintyCheck c{};
  c.dE = dE;
  c.dB = dB;
  c.l = l;
  c.lhs = dE * dB * l * l * l / kFourPi;
  c.rhs = 1.0 / l;
  c.satisfied = c.lhs >= c.rhs * (1.0 - kUncertaintyRelTol);
  c.flux_product = dE * dB * l * l * l * l;
  c.flux_bound = kFourPi;
  return c;
}

}  // namespace fluxcomm
