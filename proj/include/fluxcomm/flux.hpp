#pragma once

#include "fluxcomm/crossings.hpp"
#include "fluxcomm/distance.hpp"
#include "fluxcomm/extrapolation.hpp"
#include "fluxcomm/geom.hpp"

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace fluxcomm {

/// Signed solid angle subtended by an oriented triangle at `y`
/// (van Oosterom & Strackee, 1983). Positive when `y` lies on the side opposite
/// the right-hand normal, so that a unit charge behind the triangle sends a
/// positive flux through it. Range (-2pi, 2pi).
///
/// Throws PointOnSurface when `y` is within `tol` of the closed triangle.
template <typename Scalar>
Scalar solid_angle_triangle(const Vec3T<Scalar>& y, const std::array<Vec3T<Scalar>, 3>& tri,
                            Scalar tol = Scalar(kTolGeom)) {
  const Vec3T<Scalar> a = tri[0] - y;
  const Vec3T<Scalar> b = tri[1] - y;
  const Vec3T<Scalar> c = tri[2] - y;

  // Cheap plane test first; the exact distance is only needed near the plane.
  const Vec3T<Scalar> n = (tri[1] - tri[0]).cross(tri[2] - tri[0]);
  if (std::abs(n.dot(a)) <= tol * n.norm() &&
      point_triangle_distance(y, tri[0], tri[1], tri[2]) <= tol) {
    throw PointOnSurface("evaluation point lies on a triangle");
  }

  const Scalar la = a.norm(), lb = b.norm(), lc = c.norm();
  const Scalar numerator = a.dot(b.cross(c));
  const Scalar denominator = la * lb * lc + a.dot(b) * lc + a.dot(c) * lb + b.dot(c) * la;
  return Scalar(2) * std::atan2(numerator, denominator);
}

struct FluxSample {
  Vec3 y;
  double phi;  // Gaussian units: a unit charge has total flux 4pi
};

/// Flux through `surface` of the field of a point charge `q` at `y`.
FluxSample point_flux(const TriSurface& surface, const Vec3& y, double q = 1.0);

struct FluxJumpRow {
  double h;
  double phi_below;  // charge at point - h * normal
  double phi_above;  // charge at point + h * normal
  double jump;       // phi_above - phi_below
};

struct FluxJump {
  std::vector<FluxJumpRow> rows;
  Extrapolation extrapolation;
  double extrapolated() const { return extrapolation.estimate; }
};

/// Moves a charge `q` through the surface at `crossing` along the local
/// triangle normal and records the flux change for each probe distance h.
/// The h -> 0 limit is -4*pi*q.
FluxJump flux_jump_experiment(const TriSurface& surface, const Crossing& crossing, double q,
                              std::span<const double> h_sequence);

}  // namespace fluxcomm
