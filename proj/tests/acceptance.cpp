// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include "fluxcomm/commutator.hpp"
#include "fluxcomm/flux.hpp"
#include "fluxcomm/linkoracle.hpp"
#include "fluxcomm/scene_io.hpp"
#include "../src/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace fluxcomm;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || dt < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] AC%d %s: %s (%.3f s", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), dt);
  if (budget_s > 0) std::printf(", budget %g s", budget_s);
  std::printf(")\n");
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Scene bundled(const char* file) {
  const SceneFile f = load_scene(std::string(FLUXCOMM_SCENE_DIR) + "/" + file);
  return {f.surface("S"), f.loop("C2")};
}

const std::vector<double> kEps{0.2, 0.1, 0.05, 0.025};
const std::vector<double> kH{0.2, 0.1, 0.05, 0.025};

}  // namespace

int main() {
  const Scene hopf = bundled("hopf.json");
  const Scene unlinked = bundled("unlinked.json");
  const Scene dome = bundled("dome3.json");
  const Scene degenerate = bundled("degenerate.json");

  criterion(1, "delta-kernel crossing count", 0.1, [&] {
    const int h = signed_crossings(hopf.surface, hopf.loop).total;
    const int u = signed_crossings(unlinked.surface, unlinked.loop).total;
    return Outcome{h == 1 && u == 0, fmt("hopf total %+d, unlinked total %d", h, u)};
  });

  criterion(2, "deformation invariance", 5.0, [&] {
    const std::vector<OrientedLoop> forbidden{hopf.loop};
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const TriSurface d = deform_interior(hopf.surface, seed, 0.5, forbidden);
      ok += signed_crossings(d, hopf.loop).total == 1;
    }
    return Outcome{ok == 100, fmt("%d/100 deformations (amplitude 0.5) give +1", ok)};
  });

  criterion(3, "gauss linking oracle", 10.0, [&] {
    const OrientedLoop a = boundary_of(unit_disk(256, 8));
    const OrientedLoop b = xz_circle(256, 1.0);
    const double lk = gauss_linking(a, b, 4);
    const std::vector<OrientedLoop> forbidden{hopf.loop};
    const Scene tilted{[&] {
      std::vector<Vec3> v = dome.surface.vertices();
      const auto boundary = dome.surface.boundary_vertex_mask();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (boundary[i]) continue;
        const double r2 = v[i].x() * v[i].x() + v[i].y() * v[i].y();
        v[i].z() += 0.1 * v[i].x() * (1 - r2);
      }
      return TriSurface(v, dome.surface.triangles());
    }(), dome.loop};
    const std::vector<std::pair<const char*, Scene>> scenes{
        {"hopf", hopf},
        {"unlinked", unlinked},
        {"dome3", dome},
        {"tilted dome", tilted},
        {"reversed hopf", {hopf.surface, hopf.loop.reversed()}},
        {"deformed hopf", {deform_interior(hopf.surface, 7, 0.5, forbidden), hopf.loop}},
        {"perturbed degenerate", {degenerate.surface, perturb_rigidly(degenerate.loop, 1)}},
    };
    int agree = 0;
    std::string list;
    for (const auto& [name, s] : scenes) {
      const int total = signed_crossings(s.surface, s.loop).total;
      const double g = gauss_linking(boundary_of(s.surface), s.loop, 4);
      const bool match = std::abs(g - total) < 1e-3;
      agree += match;
      list += fmt(" %s %+d/%.6f", name, total, g);
    }
    const bool pass = std::abs(lk - 1.0) <= 1e-6 && agree >= 5 && agree == int(scenes.size());
    return Outcome{pass, fmt("256-vertex pair %.10f; %d/%zu scenes agree:", lk, agree, scenes.size()) + list};
  });

  criterion(4, "transverse correction", 30.0, [&] {
    const TransverseIntegral th = transverse_integral(hopf.surface, hopf.loop, kEps);
    const TransverseIntegral td = transverse_integral(dome.surface, dome.loop, kEps);
    // Internal arcs: the worst |value| / eps must stay bounded as eps shrinks.
    double worst_ratio = 0;
    std::string arcs;
    for (const auto& sample : td.per_eps) {
      double worst = 0;
      for (const auto& arc : sample.arcs)
        if (arc.internal) worst = std::max(worst, std::abs(arc.value));
      worst_ratio = std::max(worst_ratio, worst / sample.eps);
      arcs += fmt(" %.3g", worst);
    }
    const bool pass = std::abs(th.extrapolated() - 1) <= 1e-3 && std::abs(td.extrapolated() - 1) <= 1e-3 &&
                      worst_ratio <= 1.0;
    return Outcome{pass, fmt("hopf %.7f, dome %.7f, max internal arc per eps:", th.extrapolated(),
                             td.extrapolated()) + arcs + fmt(" (max |arc|/eps %.3g)", worst_ratio)};
  });

  criterion(5, "commutator constants", 0, [&] {
    const CommutatorReport r = evaluate_commutators(hopf.surface, hopf.loop, kEps);
    const double units = r.superconductor_units_ihc / kFourPi;
    const double ratio = r.vacuum_units_ihc / r.superconductor_units_ihc;
    const bool pass = units == std::round(units) && units != 0 &&
                      std::abs(r.vacuum_units_ihc - 2 * kFourPi) <= 0.025 &&
                      r.charge_flux_units_ihc == -1.0 && std::abs(ratio - 2) <= 2e-3;
    return Outcome{pass, fmt("superconductor %.17g (= %g x 4pi), vacuum %.6f (8pi = %.6f), charge-flux %g, ratio %.6f",
                             r.superconductor_units_ihc, units, r.vacuum_units_ihc, 2 * kFourPi,
                             r.charge_flux_units_ihc, ratio)};
  });

  criterion(6, "flux jump", 0, [&] {
    const Crossing c = signed_crossings(hopf.surface, hopf.loop).crossings.at(0);
    bool pass = true;
    std::string detail;
    const double base = flux_jump_experiment(hopf.surface, c, 1.0, kH).extrapolated();
    for (double q : {1.0, 2.0, 5.0}) {
      const double j = flux_jump_experiment(hopf.surface, c, q, kH).extrapolated();
      const double rel = std::abs(j / (-kFourPi * q) - 1);
      const double linear = std::abs(j - q * base) / std::abs(q * base);
      pass = pass && rel <= 1e-3 && linear <= 1e-12;
      detail += fmt("q=%g jump %.7f (rel err %.2e, linearity %.1e); ", q, j, rel, linear);
    }
    detail.resize(detail.size() - 2);
    return Outcome{pass, detail};
  });

  criterion(7, "gauss closure", 0, [&] {
    detail::Rng rng(2024);
    double worst = 0;
    int points = 0;
    for (const TriSurface& mesh : {octahedron(1.0), icosphere(2, 1.0)}) {
      for (int i = 0; i < 1000; ++i) {
        // Alternate interior points (inscribed ball) and exterior points.
        const Vec3 dir = rng.unit_vector();
        const bool inside = i % 2 == 0;
        const double r = inside ? 0.55 * std::cbrt(rng.uniform()) : rng.uniform(1.2, 6.0);
        const double phi = point_flux(mesh, r * dir).phi;
        worst = std::max(worst, std::abs(phi - (inside ? kFourPi : 0.0)));
        ++points;
      }
    }
    return Outcome{worst <= 1e-10, fmt("%d points on octahedron and icosphere, max error %.3g", points, worst)};
  });

  criterion(8, "boundary limits", 0, [&] {
    const TriSurface disk = unit_disk(256, 8);
    const double above = point_flux(disk, Vec3(0, 0, 1e-4)).phi;
    const double below = point_flux(disk, Vec3(0, 0, -1e-4)).phi;
    const bool pass = std::abs(above + 2 * kPi) <= 1e-2 && std::abs(below - 2 * kPi) <= 1e-2;
    return Outcome{pass, fmt("h=1e-4 above %.6f, below %.6f (2pi = %.6f)", above, below, 2 * kPi)};
  });

  criterion(9, "uncertainty boundary case", 0, [&] {
    const double root = std::sqrt(kFourPi);
    const UncertaintyCheck u = uncertainty_bound(root, root, 1.0);
    const bool pass = u.satisfied && std::abs(u.lhs - u.rhs) <= 1e-12;
    return Outcome{pass, fmt("lhs %.17g, rhs %.17g, satisfied %s", u.lhs, u.rhs, u.satisfied ? "true" : "false")};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
