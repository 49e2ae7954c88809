#pragma once

#include "fluxcomm/types.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace fluxcomm {

/// Closed, oriented polyline. The last vertex connects back to the first.
class OrientedLoop {
 public:
  /// Throws InvalidInput unless there are >= 3 finite vertices, consecutive
  /// vertices are distinct and no two non-adjacent segments come within kTolGeom.
  explicit OrientedLoop(std::vector<Vec3> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const Vec3& vertex(std::size_t i) const { return vertices_[i]; }

  /// Segment i runs from vertex i to vertex (i + 1) mod size().
  const Vec3& segment_start(std::size_t i) const { return vertices_[i]; }
  const Vec3& segment_end(std::size_t i) const { return vertices_[(i + 1) % vertices_.size()]; }

  double length() const { return cumulative_.back(); }
  /// Arclength from vertex 0 to vertex i; i == size() gives length().
  double arclength_at_vertex(std::size_t i) const { return cumulative_[i]; }
  double segment_length(std::size_t i) const { return cumulative_[i + 1] - cumulative_[i]; }

  /// Point at arclength s from vertex 0, taken modulo length().
  Vec3 point_at(double s) const;

  /// Same curve traversed in the opposite direction.
  OrientedLoop reversed() const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<double> cumulative_;
};

using TriangleIndices = std::array<int, 3>;

/// Consistently oriented triangle mesh, closed or with boundary.
/// Triangle normals follow the right-hand rule on vertex order.
class TriSurface {
 public:
  /// Throws InvalidInput for out-of-range indices, non-finite vertices or
  /// degenerate triangles, and InconsistentOrientation when an edge is used
  /// twice in the same direction or by more than two triangles.
  TriSurface(std::vector<Vec3> vertices, std::vector<TriangleIndices> triangles);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<TriangleIndices>& triangles() const { return triangles_; }
  std::size_t triangle_count() const { return triangles_.size(); }

  std::array<Vec3, 3> triangle(std::size_t t) const {
    const auto& tri = triangles_[t];
    return {vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]};
  }
  Vec3 unit_normal(std::size_t t) const;

  /// Directed edges (i, j) that have no opposite partner.
  const std::vector<std::array<int, 2>>& boundary_edges() const { return boundary_edges_; }
  bool is_closed() const { return boundary_edges_.empty(); }
  /// Per-vertex flag: vertex lies on a boundary edge.
  std::vector<bool> boundary_vertex_mask() const;

  /// Every triangle with its vertex order reversed; the boundary reverses with it.
  TriSurface flipped() const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<TriangleIndices> triangles_;
  std::vector<std::array<int, 2>> boundary_edges_;
};

/// The single boundary loop with its induced (Stokes) orientation.
/// Throws NoBoundary or MultipleBoundaryComponents.
OrientedLoop boundary_of(const TriSurface& surface);

struct Scene {
  TriSurface surface;
  OrientedLoop loop;
};

/// Unit disk in the z = 0 plane, normal +z: centre vertex, `n_radial` rings of
/// `n_boundary` vertices each at angles 2*pi*(k + 1/2)/n_boundary. With
/// n_radial == 1 this is a fan.
TriSurface unit_disk(int n_boundary, int n_radial);

/// Unit circle in the xz-plane centred at (center_x, 0, 0), `n` vertices at
/// half-step angles, oriented so it moves in +z where it passes x = center_x - 1.
OrientedLoop xz_circle(int n, double center_x);

/// Unit disk plus the circle centred at (1,0,0): linked once, positive crossing.
Scene hopf_scene(int n_curve, int n_radial);

/// Same disk, circle centred at (3,0,0): no crossings.
Scene unlinked_scene(int n_curve, int n_radial);

/// Disk lifted to z = height * (1 - r^2) with a loop that pierces it three
/// times at radius 0.55, azimuths 0, 120 and 240 degrees, with signs +1, -1, +1.
/// n_curve must be a multiple of 3 so the mesh shares the 3-fold symmetry.
Scene dome_scene(int n_curve, int n_radial, double height);

/// Fan disk with the circle routed exactly through its centre vertex.
Scene degenerate_scene(int n_curve);

/// Closed meshes with outward normals.
TriSurface octahedron(double radius);
TriSurface icosphere(int subdivisions, double radius);

/// Smooth pseudo-random displacement of the non-boundary vertices, bounded by
/// `amplitude`. Boundary vertices are copied unchanged. A draw that puts a
/// displaced vertex within kTolGeom of a forbidden loop or produces a degenerate
/// triangle is rejected and redrawn; after `max_retries` rejections throws
/// DeformationFailed.
TriSurface deform_interior(const TriSurface& surface, std::uint64_t seed, double amplitude,
                           std::span<const OrientedLoop> forbidden, int max_retries = 32);

/// Small seeded rigid motion (rotation about the centroid plus translation),
/// used to move a loop off a degenerate configuration.
OrientedLoop perturb_rigidly(const OrientedLoop& loop, std::uint64_t seed, double magnitude = 1e-6);

/// Minimum distance between two loops (segment-pair brute force).
double loop_distance(const OrientedLoop& a, const OrientedLoop& b);

}  // namespace fluxcomm
