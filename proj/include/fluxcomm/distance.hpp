#pragma once

#include "fluxcomm/types.hpp"

#include <algorithm>
#include <cmath>

namespace fluxcomm {

template <typename Scalar>
Vec3T<Scalar> closest_point_on_segment(const Vec3T<Scalar>& p, const Vec3T<Scalar>& a,
                                       const Vec3T<Scalar>& b) {
  const Vec3T<Scalar> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  if (len2 == Scalar(0)) return a;
  const Scalar t = std::clamp((p - a).dot(ab) / len2, Scalar(0), Scalar(1));
  return a + t * ab;
}

template <typename Scalar>
Scalar point_segment_distance(const Vec3T<Scalar>& p, const Vec3T<Scalar>& a,
                              const Vec3T<Scalar>& b) {
  return (p - closest_point_on_segment(p, a, b)).norm();
}

// Closest points between segments [p0,p1] and [q0,q1] (Ericson, RTCD 5.1.9).
template <typename Scalar>
Scalar segment_segment_distance(const Vec3T<Scalar>& p0, const Vec3T<Scalar>& p1,
                                const Vec3T<Scalar>& q0, const Vec3T<Scalar>& q1) {
  const Vec3T<Scalar> d1 = p1 - p0;
  const Vec3T<Scalar> d2 = q1 - q0;
  const Vec3T<Scalar> r = p0 - q0;
  const Scalar a = d1.squaredNorm();
  const Scalar e = d2.squaredNorm();
  const Scalar f = d2.dot(r);
  Scalar s = 0;
  Scalar t = 0;
  if (a == Scalar(0) && e == Scalar(0)) return r.norm();
  if (a == Scalar(0)) {
    t = std::clamp(f / e, Scalar(0), Scalar(1));
  } else {
    const Scalar c = d1.dot(r);
    if (e == Scalar(0)) {
      s = std::clamp(-c / a, Scalar(0), Scalar(1));
    } else {
      const Scalar b = d1.dot(d2);
      const Scalar denom = a * e - b * b;
      s = denom > Scalar(0) ? std::clamp((b * f - c * e) / denom, Scalar(0), Scalar(1)) : Scalar(0);
      t = (b * s + f) / e;
      if (t < Scalar(0)) {
        t = 0;
        s = std::clamp(-c / a, Scalar(0), Scalar(1));
      } else if (t > Scalar(1)) {
        t = 1;
        s = std::clamp((b - c) / a, Scalar(0), Scalar(1));
      }
    }
  }
  return ((p0 + s * d1) - (q0 + t * d2)).norm();
}

// Closest point on a triangle by Voronoi-region classification (Ericson, RTCD 5.1.5).
template <typename Scalar>
Vec3T<Scalar> closest_point_on_triangle(const Vec3T<Scalar>& p, const Vec3T<Scalar>& a,
                                        const Vec3T<Scalar>& b, const Vec3T<Scalar>& c) {
  const Vec3T<Scalar> ab = b - a;
  const Vec3T<Scalar> ac = c - a;
  const Vec3T<Scalar> ap = p - a;
  const Scalar d1 = ab.dot(ap);
  const Scalar d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return a;

  const Vec3T<Scalar> bp = p - b;
  const Scalar d3 = ab.dot(bp);
  const Scalar d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return b;

  const Scalar vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return a + (d1 / (d1 - d3)) * ab;

  const Vec3T<Scalar> cp = p - c;
  const Scalar d5 = ab.dot(cp);
  const Scalar d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return c;

  const Scalar vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return a + (d2 / (d2 - d6)) * ac;

  const Scalar va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
  }

  const Scalar denom = Scalar(1) / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

template <typename Scalar>
Scalar point_triangle_distance(const Vec3T<Scalar>& p, const Vec3T<Scalar>& a,
                               const Vec3T<Scalar>& b, const Vec3T<Scalar>& c) {
  return (p - closest_point_on_triangle(p, a, b, c)).norm();
}

}  // namespace fluxcomm
