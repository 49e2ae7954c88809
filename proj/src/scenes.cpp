#include "fluxcomm/geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace fluxcomm {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

// Reorders any face whose normal points towards the centre of a star-shaped
// closed mesh centred at the origin.
std::vector<TriangleIndices> orient_outward(const std::vector<Vec3>& v,
                                            std::vector<TriangleIndices> faces) {
  for (auto& f : faces) {
    const Vec3 n = (v[f[1]] - v[f[0]]).cross(v[f[2]] - v[f[0]]);
    const Vec3 centroid = (v[f[0]] + v[f[1]] + v[f[2]]) / 3.0;
    if (n.dot(centroid) < 0) std::swap(f[1], f[2]);
  }
  return faces;
}

}  // namespace

TriSurface unit_disk(int n_boundary, int n_radial) {
  require(n_boundary >= 3, "unit_disk: n_boundary must be >= 3");
  require(n_radial >= 1, "unit_disk: n_radial must be >= 1");

  std::vector<Vec3> v;
  v.reserve(1 + static_cast<std::size_t>(n_boundary) * n_radial);
  v.emplace_back(0.0, 0.0, 0.0);
  for (int i = 1; i <= n_radial; ++i) {
    const double r = i == n_radial ? 1.0 : static_cast<double>(i) / n_radial;
    for (int k = 0; k < n_boundary; ++k) {
      const double a = 2.0 * kPi * (k + 0.5) / n_boundary;
      v.emplace_back(r * std::cos(a), r * std::sin(a), 0.0);
    }
  }
  auto idx = [n_boundary](int ring, int k) { return 1 + (ring - 1) * n_boundary + (k % n_boundary); };

  std::vector<TriangleIndices> tris;
  for (int k = 0; k < n_boundary; ++k) tris.push_back({0, idx(1, k), idx(1, k + 1)});
  for (int i = 1; i < n_radial; ++i) {
    for (int k = 0; k < n_boundary; ++k) {
      const int a = idx(i, k), b = idx(i + 1, k), c = idx(i + 1, k + 1), d = idx(i, k + 1);
      tris.push_back({a, b, c});
      tris.push_back({a, c, d});
    }
  }
  return TriSurface(std::move(v), std::move(tris));
}

OrientedLoop xz_circle(int n, double center_x) {
  require(n >= 8, "xz_circle: need at least 8 vertices");
  std::vector<Vec3> v;
  v.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double t = kPi + 2.0 * kPi * (k + 0.5) / n;
    v.emplace_back(center_x + std::cos(t), 0.0, -std::sin(t));
  }
  return OrientedLoop(std::move(v));
}

Scene hopf_scene(int n_curve, int n_radial) {
  require(n_curve >= 8, "hopf_scene: n_curve must be >= 8");
  require(n_radial >= 2, "hopf_scene: n_radial must be >= 2");
  return {unit_disk(n_curve, n_radial), xz_circle(n_curve, 1.0)};
}

Scene unlinked_scene(int n_curve, int n_radial) {
  require(n_curve >= 8, "unlinked_scene: n_curve must be >= 8");
  require(n_radial >= 2, "unlinked_scene: n_radial must be >= 2");
  return {unit_disk(n_curve, n_radial), xz_circle(n_curve, 3.0)};
}

Scene dome_scene(int n_curve, int n_radial, double height) {
  require(n_curve >= 12 && n_curve % 3 == 0, "dome_scene: n_curve must be a multiple of 3, >= 12");
  require(n_radial >= 2, "dome_scene: n_radial must be >= 2");
  require(height > 0 && height <= 1.0, "dome_scene: height must be in (0, 1]");

  const TriSurface flat = unit_disk(n_curve, n_radial);
  const auto on_boundary = flat.boundary_vertex_mask();
  std::vector<Vec3> v = flat.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (on_boundary[i]) continue;
    v[i].z() = height * (1.0 - v[i].head<2>().squaredNorm());
  }
  TriSurface dome(std::move(v), flat.triangles());

  constexpr double rho = 0.55;
  constexpr double margin = 0.3;
  constexpr double bottom = -0.5;
  constexpr double outer = 1.5;
  constexpr int arc_steps = 16;
  const double z0 = height * (1.0 - rho * rho);
  const double hi = z0 + margin;
  const double lo = z0 - margin;

  auto at = [](double r, double deg, double z) {
    const double a = deg * kPi / 180.0;
    return Vec3(r * std::cos(a), r * std::sin(a), z);
  };
  std::vector<Vec3> loop;
  auto arc = [&](double from_deg, double to_deg, double z) {
    for (int s = 1; s < arc_steps; ++s) {
      loop.push_back(at(rho, from_deg + (to_deg - from_deg) * s / arc_steps, z));
    }
  };
  loop.push_back(at(rho, 0, bottom));  // up through the dome at 0 deg
  loop.push_back(at(rho, 0, hi));
  arc(0, 120, hi);
  loop.push_back(at(rho, 120, hi));    // down through it at 120 deg
  loop.push_back(at(rho, 120, lo));
  arc(120, 240, lo);
  loop.push_back(at(rho, 240, lo));    // up again at 240 deg
  loop.push_back(at(rho, 240, hi));
  loop.push_back(at(outer, 240, hi));  // out over the rim, down, back underneath
  loop.push_back(at(outer, 240, bottom));
  loop.push_back(at(rho, 240, bottom));
  arc(240, 360, bottom);

  // Split long straight runs so quadrature over the loop stays accurate.
  constexpr double max_step = 0.05;
  std::vector<Vec3> fine;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec3& a = loop[i];
    const Vec3& b = loop[(i + 1) % loop.size()];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a).norm() / max_step)));
    for (int k = 0; k < pieces; ++k) fine.push_back(a + (b - a) * (static_cast<double>(k) / pieces));
  }
  return {std::move(dome), OrientedLoop(std::move(fine))};
}

Scene degenerate_scene(int n_curve) {
  require(n_curve >= 8, "degenerate_scene: n_curve must be >= 8");
  std::vector<Vec3> v;
  for (int k = 0; k < n_curve; ++k) {
    const double t = kPi + 2.0 * kPi * k / n_curve;
    v.emplace_back(1.0 + std::cos(t), 0.0, -std::sin(t));
  }
  return {unit_disk(n_curve, 1), OrientedLoop(std::move(v))};
}

TriSurface octahedron(double radius) {
  require(radius > 0, "octahedron: radius must be positive");
  const double r = radius;
  std::vector<Vec3> v{{r, 0, 0}, {-r, 0, 0}, {0, r, 0}, {0, -r, 0}, {0, 0, r}, {0, 0, -r}};
  std::vector<TriangleIndices> f{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                 {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  f = orient_outward(v, std::move(f));
  return TriSurface(std::move(v), std::move(f));
}

TriSurface icosphere(int subdivisions, double radius) {
  require(subdivisions >= 0, "icosphere: subdivisions must be >= 0");
  require(radius > 0, "icosphere: radius must be positive");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v{{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                      {0, -1, -t}, {0, 1, -t}, {t, 0, -1},  {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  for (auto& p : v) p = p.normalized() * radius;
  std::vector<TriangleIndices> f{{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                 {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                 {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                 {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto [it, inserted] = midpoint.emplace(key, static_cast<int>(v.size()));
      if (inserted) v.push_back((0.5 * (v[a] + v[b])).normalized() * radius);
      return it->second;
    };
    std::vector<TriangleIndices> next;
    next.reserve(f.size() * 4);
    for (const auto& tri : f) {
      const int ab = mid(tri[0], tri[1]), bc = mid(tri[1], tri[2]), ca = mid(tri[2], tri[0]);
      next.push_back({tri[0], ab, ca});
      next.push_back({tri[1], bc, ab});
      next.push_back({tri[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    f = std::move(next);
  }
  f = orient_outward(v, std::move(f));
  return TriSurface(std::move(v), std::move(f));
}

}  // namespace fluxcomm
