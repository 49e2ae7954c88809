#include "fluxcomm/geom.hpp"

#include "fluxcomm/distance.hpp"
#include "rng.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace fluxcomm {

namespace {

struct Bump {
  Vec3 center;
  Vec3 direction;  // already scaled by the signed coefficient
  double inv_two_sigma2;
};

double distance_to_loop(const Vec3& p, const OrientedLoop& loop) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < loop.size(); ++i) {
    best = std::min(best, point_segment_distance(p, loop.segment_start(i), loop.segment_end(i)));
  }
  return best;
}

}  // namespace

TriSurface deform_interior(const TriSurface& surface, std::uint64_t seed, double amplitude,
                           std::span<const OrientedLoop> forbidden, int max_retries) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw InvalidInput("deform_interior: amplitude must be finite and >= 0");
  }
  if (amplitude == 0.0) return surface;

  const auto& base = surface.vertices();
  const auto on_boundary = surface.boundary_vertex_mask();
  if (std::all_of(on_boundary.begin(), on_boundary.end(), [](bool b) { return b; })) {
    return surface;  // nothing to move
  }

  Vec3 lo = base.front(), hi = base.front();
  for (const auto& p : base) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Vec3 extent = hi - lo;
  const double diag = extent.norm();

  // Falloff that vanishes on the boundary curve and saturates inside.
  std::vector<double> weight(base.size(), 1.0);
  if (!surface.is_closed()) {
    const OrientedLoop rim = boundary_of(surface);
    const double falloff = 0.25 * diag;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (on_boundary[i]) {
        weight[i] = 0.0;
        continue;
      }
      const double d = distance_to_loop(base[i], rim) / falloff;
      weight[i] = 1.0 - std::exp(-d * d);
    }
  }

  detail::Rng rng(seed);
  constexpr int kBumps = 4;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Bump> bumps;
    for (int k = 0; k < kBumps; ++k) {
      Bump b;
      b.center = lo + Vec3(rng.uniform(), rng.uniform(), rng.uniform()).cwiseProduct(extent);
      b.direction = rng.uniform(-1, 1) * rng.unit_vector();
      const double sigma = rng.uniform(0.3, 0.6) * diag;
      b.inv_two_sigma2 = 1.0 / (2.0 * sigma * sigma);
      bumps.push_back(b);
    }
    const double target = amplitude * rng.uniform(0.5, 1.0);

    std::vector<Vec3> field(base.size(), Vec3::Zero());
    double peak = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (on_boundary[i]) continue;
      for (const auto& b : bumps) {
        field[i] += b.direction * std::exp(-(base[i] - b.center).squaredNorm() * b.inv_two_sigma2);
      }
      field[i] *= weight[i];
      peak = std::max(peak, field[i].norm());
    }
    if (peak == 0.0) continue;

    std::vector<Vec3> moved = base;
    bool clear = true;
    for (std::size_t i = 0; i < base.size() && clear; ++i) {
      if (on_boundary[i]) continue;
      moved[i] = base[i] + (target / peak) * field[i];
      for (const auto& loop : forbidden) {
        if (distance_to_loop(moved[i], loop) <= kTolGeom) {
          clear = false;
          break;
        }
      }
    }
    if (!clear) continue;
    try {
      return TriSurface(std::move(moved), surface.triangles());
    } catch (const InvalidInput&) {
      // degenerate triangle: redraw
    }
  }
  throw DeformationFailed("deform_interior: no admissible displacement after " +
                          std::to_string(max_retries + 1) + " draws (seed " +
                          std::to_string(seed) + ")");
}

OrientedLoop perturb_rigidly(const OrientedLoop& loop, std::uint64_t seed, double magnitude) {
  detail::Rng rng(seed);
  const Vec3 axis = rng.unit_vector();
  const double angle = magnitude * rng.uniform(0.5, 1.0);
  const Vec3 shift = magnitude * rng.uniform(0.5, 1.0) * rng.unit_vector();

  Vec3 centroid = Vec3::Zero();
  for (const auto& p : loop.vertices()) centroid += p;
  centroid /= static_cast<double>(loop.size());

  const Eigen::Matrix3d rot = Eigen::AngleAxisd(angle, axis).toRotationMatrix();
  std::vector<Vec3> moved;
  moved.reserve(loop.size());
  for (const auto& p : loop.vertices()) moved.push_back(centroid + rot * (p - centroid) + shift);
  return OrientedLoop(std::move(moved));
}

}  // namespace fluxcomm
