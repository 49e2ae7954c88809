#include "fluxcomm/flux.hpp"

#include <string>

namespace fluxcomm {

FluxSample point_flux(const TriSurface& surface, const Vec3& y, double q) {
  if (!all_finite(y)) throw InvalidInput("point_flux: evaluation point is not finite");
  double total = 0.0;
  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    total += solid_angle_triangle(y, surface.triangle(t));
  }
  return {y, q * total};
}

FluxJump flux_jump_experiment(const TriSurface& surface, const Crossing& crossing, double q,
                              std::span<const double> h_sequence) {
  if (crossing.triangle_index < 0 ||
      static_cast<std::size_t>(crossing.triangle_index) >= surface.triangle_count()) {
    throw InvalidInput("flux_jump_experiment: crossing refers to a missing triangle");
  }
  for (double h : h_sequence) {
    if (!(h > kTolGeom) || !std::isfinite(h)) {
      throw InvalidInput("flux_jump_experiment: every h must exceed the geometric tolerance");
    }
  }
  const Vec3 normal = surface.unit_normal(crossing.triangle_index);

  FluxJump out;
  std::vector<double> jumps;
  for (double h : h_sequence) {
    FluxJumpRow row;
    row.h = h;
    row.phi_below = point_flux(surface, crossing.point - h * normal, q).phi;
    row.phi_above = point_flux(surface, crossing.point + h * normal, q).phi;
    row.jump = row.phi_above - row.phi_below;
    out.rows.push_back(row);
    jumps.push_back(row.jump);
  }
  out.extrapolation = richardson(h_sequence, jumps);
  return out;
}

}  // namespace fluxcomm
