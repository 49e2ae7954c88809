#include "fluxcomm/geom.hpp"

#include "fluxcomm/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

namespace fluxcomm {

OrientedLoop::OrientedLoop(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw InvalidInput("loop needs at least 3 vertices, got " + std::to_string(n));
  for (const auto& v : vertices_) {
    if (!all_finite(v)) throw InvalidInput("loop vertex is not finite");
  }
  cumulative_.resize(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double len = (segment_end(i) - segment_start(i)).norm();
    if (len <= kTolGeom) {
      throw InvalidInput("loop vertices " + std::to_string(i) + " and " +
                         std::to_string((i + 1) % n) + " coincide");
    }
    cumulative_[i + 1] = cumulative_[i] + len;
  }
  // Non-adjacent segment pairs must stay apart.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const double d = segment_segment_distance(segment_start(i), segment_end(i),
                                                segment_start(j), segment_end(j));
      if (d <= kTolGeom) {
        throw InvalidInput("loop self-intersects between segments " + std::to_string(i) +
                           " and " + std::to_string(j));
      }
    }
  }
}

Vec3 OrientedLoop::point_at(double s) const {
  const double total = length();
  s = std::fmod(s, total);
  if (s < 0) s += total;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
  i = std::clamp<std::size_t>(i, 1, vertices_.size()) - 1;
  const double t = (s - cumulative_[i]) / segment_length(i);
  return segment_start(i) + t * (segment_end(i) - segment_start(i));
}

OrientedLoop OrientedLoop::reversed() const {
  std::vector<Vec3> rev(vertices_.rbegin(), vertices_.rend());
  return OrientedLoop(std::move(rev));
}

TriSurface::TriSurface(std::vector<Vec3> vertices, std::vector<TriangleIndices> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  const int nv = static_cast<int>(vertices_.size());
  if (triangles_.empty()) throw InvalidInput("surface has no triangles");
  for (const auto& v : vertices_) {
    if (!all_finite(v)) throw InvalidInput("surface vertex is not finite");
  }

  std::map<std::pair<int, int>, int> directed;  // edge -> triangle
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= nv) {
        throw InvalidInput("triangle " + std::to_string(t) + " has out-of-range index");
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw InvalidInput("triangle " + std::to_string(t) + " repeats a vertex");
    }
    const auto [a, b, c] = triangle(t);
    if (0.5 * (b - a).cross(c - a).norm() <= kTolGeom * kTolGeom) {
      throw InvalidInput("triangle " + std::to_string(t) + " is degenerate");
    }
    for (int k = 0; k < 3; ++k) {
      const std::pair<int, int> e{tri[k], tri[(k + 1) % 3]};
      if (!directed.emplace(e, static_cast<int>(t)).second) {
        throw InconsistentOrientation("edge (" + std::to_string(e.first) + "," +
                                      std::to_string(e.second) +
                                      ") is traversed in the same direction by two triangles");
      }
    }
  }
  for (const auto& [edge, t] : directed) {
    if (!directed.contains({edge.second, edge.first})) {
      boundary_edges_.push_back({edge.first, edge.second});
    }
  }
}

Vec3 TriSurface::unit_normal(std::size_t t) const {
  const auto [a, b, c] = triangle(t);
  return (b - a).cross(c - a).normalized();
}

std::vector<bool> TriSurface::boundary_vertex_mask() const {
  std::vector<bool> mask(vertices_.size(), false);
  for (const auto& e : boundary_edges_) {
    mask[e[0]] = true;
    mask[e[1]] = true;
  }
  return mask;
}

TriSurface TriSurface::flipped() const {
  std::vector<TriangleIndices> tris = triangles_;
  for (auto& t : tris) std::swap(t[1], t[2]);
  return TriSurface(vertices_, std::move(tris));
}

OrientedLoop boundary_of(const TriSurface& surface) {
  const auto& edges = surface.boundary_edges();
  if (edges.empty()) throw NoBoundary("surface is closed");

  std::map<int, int> next;
  for (const auto& e : edges) {
    if (!next.emplace(e[0], e[1]).second) {
      throw MultipleBoundaryComponents("boundary is pinched at vertex " + std::to_string(e[0]));
    }
  }
  // Start from the smallest boundary vertex index so the result is canonical.
  const int start = next.begin()->first;
  std::vector<Vec3> loop;
  int v = start;
  do {
    loop.push_back(surface.vertices()[v]);
    auto it = next.find(v);
    if (it == next.end()) throw MultipleBoundaryComponents("boundary chain is open");
    v = it->second;
    if (loop.size() > edges.size()) throw MultipleBoundaryComponents("boundary does not close");
  } while (v != start);
  if (loop.size() != edges.size()) {
    throw MultipleBoundaryComponents("boundary has " + std::to_string(edges.size()) +
                                     " edges but the loop through vertex " +
                                     std::to_string(start) + " has " +
                                     std::to_string(loop.size()));
  }
  return OrientedLoop(std::move(loop));
}

double loop_distance(const OrientedLoop& a, const OrientedLoop& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, segment_segment_distance(a.segment_start(i), a.segment_end(i),
                                                     b.segment_start(j), b.segment_end(j)));
    }
  }
  return best;
}

}  // namespace fluxcomm
