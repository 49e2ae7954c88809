#include "fluxcomm/geom.hpp"
#include "fluxcomm/linkoracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace fluxcomm;

TEST_SUITE("geom") {

TEST_CASE("loop rejects bad vertex lists") {
  CHECK_THROWS_AS(OrientedLoop({Vec3(0, 0, 0), Vec3(1, 0, 0)}), InvalidInput);
  CHECK_THROWS_AS(OrientedLoop({Vec3(0, 0, 0), Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}),
                  InvalidInput);
  CHECK_THROWS_AS(OrientedLoop({Vec3(0, 0, 0), Vec3(NAN, 0, 0), Vec3(0, 1, 0)}), InvalidInput);
  // Bow-tie: segments 0 and 2 cross at (0.5, 0.5, 0).
  CHECK_THROWS_AS(OrientedLoop({Vec3(0, 0, 0), Vec3(1, 1, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}),
                  InvalidInput);
}

TEST_CASE("loop arclength lookup wraps around") {
  const OrientedLoop square({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)});
  CHECK(square.length() == doctest::Approx(4.0));
  CHECK((square.point_at(0.5) - Vec3(0.5, 0, 0)).norm() < 1e-15);
  CHECK((square.point_at(2.25) - Vec3(0.75, 1, 0)).norm() < 1e-15);
  CHECK((square.point_at(4.5) - Vec3(0.5, 0, 0)).norm() < 1e-15);
  CHECK((square.point_at(-0.5) - Vec3(0, 0.5, 0)).norm() < 1e-15);
  const OrientedLoop rev = square.reversed();
  CHECK(rev.vertex(0) == square.vertex(3));
}

TEST_CASE("fan disk boundary is the counterclockwise unit circle") {
  const TriSurface disk = unit_disk(64, 1);
  const OrientedLoop rim = boundary_of(disk);
  REQUIRE(rim.size() == 64);
  double twice_area = 0;
  for (std::size_t i = 0; i < rim.size(); ++i) {
    CHECK(rim.vertex(i).norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rim.vertex(i).z() == 0.0);
    const Vec3& a = rim.segment_start(i);
    const Vec3& b = rim.segment_end(i);
    twice_area += a.x() * b.y() - a.y() * b.x();
  }
  CHECK(twice_area > 0);  // counterclockwise seen from +z
  for (std::size_t t = 0; t < disk.triangle_count(); ++t) {
    CHECK(disk.unit_normal(t).z() == doctest::Approx(1.0));
  }
}

TEST_CASE("constructed surfaces have a single consistently oriented boundary") {
  for (const TriSurface& s : {unit_disk(16, 3), hopf_scene(64, 8).surface,
                              dome_scene(48, 8, 0.5).surface, unit_disk(256, 8)}) {
    const OrientedLoop rim = boundary_of(s);
    CHECK(rim.size() == s.boundary_edges().size());
    // Euler characteristic of a disk: V - E + F = 1.
    const long edges = (3 * static_cast<long>(s.triangle_count()) +
                        static_cast<long>(s.boundary_edges().size())) / 2;
    CHECK(static_cast<long>(s.vertices().size()) - edges +
              static_cast<long>(s.triangle_count()) == 1);
  }
}

TEST_CASE("closed mesh has no boundary") {
  CHECK_THROWS_AS(boundary_of(octahedron(1.0)), NoBoundary);
  CHECK_THROWS_AS(boundary_of(icosphere(2, 1.0)), NoBoundary);
  CHECK(icosphere(2, 1.0).is_closed());
}

TEST_CASE("flipping one triangle of a disk is an orientation conflict") {
  const TriSurface disk = unit_disk(16, 2);
  auto tris = disk.triangles();
  std::swap(tris[5][1], tris[5][2]);
  CHECK_THROWS_AS(TriSurface(disk.vertices(), tris), InconsistentOrientation);
}

TEST_CASE("two boundary components are rejected") {
  // Two disjoint triangles.
  const TriSurface pair({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(5, 0, 0),
                         Vec3(6, 0, 0), Vec3(5, 1, 0)},
                        {{0, 1, 2}, {3, 4, 5}});
  CHECK_THROWS_AS(boundary_of(pair), MultipleBoundaryComponents);

  // Annulus: inner and outer rims.
  const TriSurface disk = unit_disk(16, 3);
  std::vector<TriangleIndices> ring(disk.triangles().begin() + 16, disk.triangles().end());
  const TriSurface annulus(disk.vertices(), ring);
  CHECK_THROWS_AS(boundary_of(annulus), MultipleBoundaryComponents);
}

TEST_CASE("degenerate triangles and bad indices are rejected") {
  CHECK_THROWS_AS(TriSurface({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0)}, {{0, 1, 2}}),
                  InvalidInput);
  CHECK_THROWS_AS(TriSurface({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}, {{0, 1, 3}}),
                  InvalidInput);
}

TEST_CASE("flipped surface reverses normals and boundary") {
  const TriSurface disk = unit_disk(32, 2);
  const TriSurface down = disk.flipped();
  CHECK(down.unit_normal(0).z() == doctest::Approx(-1.0));
  const OrientedLoop up_rim = boundary_of(disk);
  const OrientedLoop down_rim = boundary_of(down);
  const Vec3 t_up = up_rim.segment_end(0) - up_rim.segment_start(0);
  // Tangent at the same vertex points the other way.
  bool found = false;
  for (std::size_t i = 0; i < down_rim.size(); ++i) {
    if (down_rim.segment_end(i) == up_rim.segment_start(0)) {
      const Vec3 t_down = down_rim.segment_end(i) - down_rim.segment_start(i);
      CHECK(t_down.dot(t_up) < 0);
      CHECK(down_rim.segment_start(i) == up_rim.segment_end(0));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("hopf scene shape") {
  const Scene s = hopf_scene(64, 8);
  CHECK(s.loop.size() == 64);
  for (const auto& p : s.loop.vertices()) {
    CHECK((p - Vec3(1, 0, 0)).norm() == doctest::Approx(1.0));
    CHECK(p.y() == 0.0);
  }
  CHECK_THROWS_AS(hopf_scene(4, 8), InvalidInput);
  CHECK_THROWS_AS(hopf_scene(64, 1), InvalidInput);
  CHECK(gauss_linking(boundary_of(s.surface), s.loop) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("deform_interior with zero amplitude is the identity") {
  const Scene s = hopf_scene(64, 8);
  const TriSurface same = deform_interior(s.surface, 7, 0.0, {});
  CHECK(same.vertices() == s.surface.vertices());
  CHECK(same.triangles() == s.surface.triangles());
}

TEST_CASE("deform_interior keeps the boundary bit-exact and bounds the displacement") {
  const Scene s = hopf_scene(64, 8);
  const std::vector<OrientedLoop> forbidden{s.loop};
  const auto mask = s.surface.boundary_vertex_mask();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TriSurface d = deform_interior(s.surface, seed, 0.5, forbidden);
    double peak = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      const double shift = (d.vertices()[i] - s.surface.vertices()[i]).norm();
      if (mask[i]) {
        CHECK(d.vertices()[i] == s.surface.vertices()[i]);
      }
      peak = std::max(peak, shift);
    }
    CHECK(peak <= 0.5 + 1e-12);
    CHECK(peak > 0.2);  // rescaled to at least half the amplitude
    const OrientedLoop rim = boundary_of(d);
    CHECK(rim.vertices() == boundary_of(s.surface).vertices());
  }
}

TEST_CASE("deform_interior is deterministic per seed") {
  const Scene s = hopf_scene(32, 4);
  const TriSurface a = deform_interior(s.surface, 11, 0.3, {});
  const TriSurface b = deform_interior(s.surface, 11, 0.3, {});
  const TriSurface c = deform_interior(s.surface, 12, 0.3, {});
  CHECK(a.vertices() == b.vertices());
  CHECK(a.vertices() != c.vertices());
}

TEST_CASE("deform_interior gives up when every draw hits a forbidden loop") {
  const Scene s = hopf_scene(32, 4);
  // First draw for this seed, then forbid a loop through one of its moved vertices.
  const TriSurface first = deform_interior(s.surface, 3, 0.3, {}, 0);
  const Vec3 v = first.vertices()[0];  // centre vertex, always interior
  const std::vector<OrientedLoop> forbidden{
      OrientedLoop({v, v + Vec3(0.01, 0, 0), v + Vec3(0, 0.01, 0)})};
  CHECK_THROWS_AS(deform_interior(s.surface, 3, 0.3, forbidden, 0), DeformationFailed);
  CHECK_THROWS_AS(deform_interior(s.surface, 3, -1.0, {}), InvalidInput);
}

TEST_CASE("perturb_rigidly moves a loop by about the requested magnitude") {
  const OrientedLoop loop = hopf_scene(64, 2).loop;
  const OrientedLoop moved = perturb_rigidly(loop, 5, 1e-6);
  double peak = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    peak = std::max(peak, (moved.vertex(i) - loop.vertex(i)).norm());
  }
  CHECK(peak > 0);
  CHECK(peak < 1e-5);
  CHECK(moved.length() == doctest::Approx(loop.length()).epsilon(1e-12));
}

}  // TEST_SUITE
