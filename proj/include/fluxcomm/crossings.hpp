#pragma once

#include "fluxcomm/distance.hpp"
#include "fluxcomm/geom.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace fluxcomm {

template <typename Scalar>
struct SegmentHit {
  Vec3T<Scalar> point;
  Scalar s;  // position along the segment, in (0, 1)
  int sign;  // sgn((b - a) . n)
};

/// Transversal crossing of the open segment (a, b) with the open triangle.
/// Returns nothing when they are clearly apart. Throws DegenerateIncidence when
/// the segment lies in the triangle plane and meets it, ends on the triangle,
/// or passes within `tol` of one of its edges or vertices.
template <typename Scalar>
std::optional<SegmentHit<Scalar>> segment_triangle_intersection(
    const Vec3T<Scalar>& a, const Vec3T<Scalar>& b, const std::array<Vec3T<Scalar>, 3>& tri,
    Scalar tol = Scalar(kTolGeom)) {
  const Vec3T<Scalar> n = (tri[1] - tri[0]).cross(tri[2] - tri[0]).normalized();
  const Scalar da = n.dot(a - tri[0]);
  const Scalar db = n.dot(b - tri[0]);

  // Signed in-plane distances from q to the three edge lines, positive inside.
  auto edge_distances = [&](const Vec3T<Scalar>& q) {
    std::array<Scalar, 3> d;
    for (int k = 0; k < 3; ++k) {
      const Vec3T<Scalar>& p0 = tri[k];
      const Vec3T<Scalar>& p1 = tri[(k + 1) % 3];
      const Vec3T<Scalar> inward = n.cross(p1 - p0).normalized();
      d[k] = inward.dot(q - p0);
    }
    return d;
  };
  auto touches = [&](const Vec3T<Scalar>& q) {
    const auto d = edge_distances(q);
    return d[0] >= -tol && d[1] >= -tol && d[2] >= -tol;
  };

  const bool a_on = std::abs(da) <= tol;
  const bool b_on = std::abs(db) <= tol;
  if (a_on && b_on) {
    // In-plane: any contact is degenerate.
    bool contact = touches(a) || touches(b);
    for (int k = 0; k < 3 && !contact; ++k) {
      contact = segment_segment_distance(a, b, tri[k], tri[(k + 1) % 3]) <= tol;
    }
    if (contact) throw DegenerateIncidence("segment lies in the plane of a triangle it meets");
    return std::nullopt;
  }
  if (a_on || b_on) {
    if (touches(a_on ? a : b)) throw DegenerateIncidence("segment endpoint lies on a triangle");
    return std::nullopt;
  }
  if ((da > 0) == (db > 0)) return std::nullopt;

  const Scalar s = da / (da - db);
  const Vec3T<Scalar> p = a + s * (b - a);
  const auto d = edge_distances(p);
  const Scalar dmin = std::min({d[0], d[1], d[2]});
  if (dmin < -tol) return std::nullopt;
  if (dmin <= tol) throw DegenerateIncidence("segment passes through a triangle edge or vertex");
  return SegmentHit<Scalar>{p, s, (b - a).dot(n) > 0 ? 1 : -1};
}

struct Crossing {
  Vec3 point;
  int triangle_index;
  double loop_arc_parameter;  // arclength fraction along the loop, in [0, 1)
  int sign;
  int segment_index;
  double segment_parameter;
};

struct CrossingSet {
  std::vector<Crossing> crossings;  // sorted by loop_arc_parameter
  int total = 0;
};

/// All transversal crossings of `loop` through `surface` and their signed sum.
/// DegenerateIncidence propagates from any segment/triangle pair.
CrossingSet signed_crossings(const TriSurface& surface, const OrientedLoop& loop);

}  // namespace fluxcomm
