// fluxcomm: command-line front end for the crossing, flux and commutator
// computations. Every verb reads a JSON scene file.
//
// Exit codes: 0 success, 1 input error, 2 degenerate geometry,
// 3 convergence or verification failure.

#include "fluxcomm/commutator.hpp"
#include "fluxcomm/crossings.hpp"
#include "fluxcomm/flux.hpp"
#include "fluxcomm/geom.hpp"
#include "fluxcomm/linkoracle.hpp"
#include "fluxcomm/scene_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace fluxcomm;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitConvergence = 3;

/// Extrapolation residual above which a run is reported as not converged.
constexpr double kConvergenceTol = 1e-3;

std::string signed_int(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

std::string symbolic_ihc(double units, bool in_pi) {
  char buf[64];
  if (in_pi) {
    std::snprintf(buf, sizeof buf, "%.6gπ iħc", units / kPi);
  } else {
    std::snprintf(buf, sizeof buf, "%.6g iħc", units);
  }
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

struct SceneArgs {
  std::string file;
  std::string surface;
  std::string loop;
  std::optional<std::uint64_t> perturb;
};

void add_scene_args(CLI::App* cmd, SceneArgs& args) {
  cmd->add_option("scene", args.file, "Scene JSON file")->required();
  cmd->add_option("--surface", args.surface, "Surface name (default: first surface)");
  cmd->add_option("--loop", args.loop, "Loop name (default: first loop)");
  cmd->add_option("--perturb", args.perturb,
                  "Seed for a tiny rigid displacement of the loop to escape degeneracy");
}

struct Loaded {
  SceneFile scene;
  const TriSurface* surface;
  OrientedLoop loop;
};

Loaded load(const SceneArgs& args) {
  SceneFile scene = load_scene(args.file);
  const TriSurface* surface = &scene.surface(args.surface);
  OrientedLoop loop = scene.loop(args.loop);
  if (args.perturb) loop = perturb_rigidly(loop, *args.perturb);
  // `surface` points into `scene`; fix it up after the move.
  const std::size_t index = static_cast<std::size_t>(
      std::find_if(scene.surfaces.begin(), scene.surfaces.end(),
                   [&](const NamedSurface& s) { return &s.surface == surface; }) -
      scene.surfaces.begin());
  Loaded out{std::move(scene), nullptr, std::move(loop)};
  out.surface = &out.scene.surfaces[index].surface;
  return out;
}

int run_crossings(const SceneArgs& args) {
  const Loaded in = load(args);
  const CrossingSet set = signed_crossings(*in.surface, in.loop);
  std::cout << "crossings: " << set.crossings.size() << "\n";
  for (std::size_t i = 0; i < set.crossings.size(); ++i) {
    const Crossing& c = set.crossings[i];
    std::cout << "  [" << i << "] arc=" << format_double(c.loop_arc_parameter)
              << " segment=" << c.segment_index << " triangle=" << c.triangle_index
              << " sign=" << signed_int(c.sign) << " point=(" << format_double(c.point.x())
              << ", " << format_double(c.point.y()) << ", " << format_double(c.point.z())
              << ")\n";
  }
  std::cout << "total = " << signed_int(set.total) << "\n";
  return kExitOk;
}

int run_commutator(const SceneArgs& args, const std::vector<double>& eps, const std::string& csv) {
  const Loaded in = load(args);
  const CommutatorReport report = evaluate_commutators(*in.surface, in.loop, eps);
  auto doc = report_to_json(report);
  doc["symbolic"] = {{"superconductor", symbolic_ihc(report.superconductor_units_ihc, true)},
                     {"vacuum", symbolic_ihc(report.vacuum_units_ihc, true)},
                     {"charge_flux", symbolic_ihc(report.charge_flux_units_ihc, false)}};
  std::cout << dump_json(doc);
  if (!csv.empty()) write_file(csv, convergence_csv(report));
  if (report.extrapolation_residual > kConvergenceTol) {
    std::cerr << "fluxcomm: transverse extrapolation residual "
              << format_double(report.extrapolation_residual) << " exceeds "
              << format_double(kConvergenceTol) << "\n";
    return kExitConvergence;
  }
  return kExitOk;
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FLUXCOMM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

int run_sweep(const SceneArgs& args, int seeds, double amplitude, std::uint64_t first_seed) {
  if (seeds < 1) throw InvalidInput("--seeds must be >= 1");
  const Loaded in = load(args);
  std::vector<OrientedLoop> forbidden;
  for (const auto& l : in.scene.loops) forbidden.push_back(l.loop);
  const int reference = signed_crossings(*in.surface, in.loop).total;

  enum class Outcome { Total, DeformationFailed, Degenerate };
  struct Result {
    Outcome outcome = Outcome::Total;
    int total = 0;
  };
  std::vector<Result> results(static_cast<std::size_t>(seeds));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < seeds; i = next++) {
      Result& r = results[static_cast<std::size_t>(i)];
      try {
        const TriSurface deformed =
            deform_interior(*in.surface, first_seed + static_cast<std::uint64_t>(i), amplitude,
                            forbidden);
        r.total = signed_crossings(deformed, in.loop).total;
      } catch (const DeformationFailed&) {
        r.outcome = Outcome::DeformationFailed;
      } catch (const DegenerateIncidence&) {
        r.outcome = Outcome::Degenerate;
      }
    }
  };
  const unsigned n_threads = std::min<unsigned>(thread_cap(), static_cast<unsigned>(seeds));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<int, int> histogram;
  int failed = 0, degenerate = 0;
  for (const auto& r : results) {
    if (r.outcome == Outcome::Total) ++histogram[r.total];
    if (r.outcome == Outcome::DeformationFailed) ++failed;
    if (r.outcome == Outcome::Degenerate) ++degenerate;
  }
  const int matching = histogram.count(reference) ? histogram[reference] : 0;
  std::cout << "undeformed total = " << signed_int(reference) << "\n";
  std::cout << "totals:";
  for (const auto& [total, count] : histogram) std::cout << " " << signed_int(total) << " x" << count;
  std::cout << "\n";
  if (failed) std::cout << "deformation failures: " << failed << "\n";
  if (degenerate) std::cout << "degenerate deformations: " << degenerate << "\n";
  std::cout << matching << "/" << seeds << " totals = " << signed_int(reference) << "\n";
  const bool all_equal = histogram.size() <= 1 && matching > 0;
  return all_equal ? kExitOk : kExitConvergence;
}

int run_fluxjump(const SceneArgs& args, double q, const std::vector<double>& h, int crossing,
                 const std::string& csv) {
  const Loaded in = load(args);
  const CrossingSet set = signed_crossings(*in.surface, in.loop);
  if (crossing < 0 || static_cast<std::size_t>(crossing) >= set.crossings.size()) {
    throw InvalidInput("--crossing " + std::to_string(crossing) + " out of range; scene has " +
                       std::to_string(set.crossings.size()) + " crossings");
  }
  const FluxJump jump = flux_jump_experiment(*in.surface, set.crossings[crossing], q, h);
  const std::string table = flux_jump_csv(jump);
  std::cout << table;
  std::cout << "# crossing " << crossing << " sign " << signed_int(set.crossings[crossing].sign)
            << "\n";
  std::cout << "# extrapolated jump = " << format_double(jump.extrapolated()) << "\n";
  std::cout << "# expected -4*pi*q = " << format_double(-kFourPi * q) << "\n";
  if (!csv.empty()) write_file(csv, table);
  const double scale = std::max(1.0, std::abs(jump.extrapolated()));
  if (jump.extrapolation.residual > kConvergenceTol * scale) {
    std::cerr << "fluxjump: extrapolation residual "
              << format_double(jump.extrapolation.residual) << " too large\n";
    return kExitConvergence;
  }
  return kExitOk;
}

OrientedLoop resolve_loop(const SceneFile& scene, const std::string& name) {
  for (const auto& l : scene.loops) {
    if (l.name == name) return l.loop;
  }
  for (const auto& s : scene.surfaces) {
    if (s.name == name) return boundary_of(s.surface);
  }
  throw InvalidInput("no loop or surface named \"" + name + "\"");
}

int run_linking(const std::string& file, std::string a, std::string b, int quad) {
  const SceneFile scene = load_scene(file);
  const OrientedLoop loop_a = a.empty() ? boundary_of(scene.surface()) : resolve_loop(scene, a);
  const OrientedLoop loop_b = b.empty() ? scene.loop() : resolve_loop(scene, b);
  const double lk = gauss_linking(loop_a, loop_b, quad);
  std::cout << "linking = " << format_double(lk) << "\n";
  std::cout << "nearest integer = " << signed_int(static_cast<int>(std::lround(lk))) << "\n";
  return kExitOk;
}

int run_uncertainty(double dE, double dB, double l) {
  const UncertaintyCheck c = uncertainty_bound(dE, dB, l);
  nlohmann::ordered_json doc{{"dE", c.dE},
                             {"dB", c.dB},
                             {"l", c.l},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"satisfied", c.satisfied},
                             {"flux_product", c.flux_product},
                             {"flux_bound", c.flux_bound}};
  std::cout << dump_json(doc);
  return kExitOk;
}

int run_scene(const std::string& kind, const std::string& output) {
  Scene scene = [&] {
    if (kind == "hopf") return hopf_scene(64, 8);
    if (kind == "unlinked") return unlinked_scene(64, 8);
    if (kind == "dome3") return dome_scene(48, 8, 0.5);
    if (kind == "degenerate") return degenerate_scene(64);
    throw InvalidInput("unknown scene kind \"" + kind + "\"");
  }();
  SceneFile file;
  file.surfaces.push_back({"S", std::move(scene.surface)});
  file.loops.push_back({"C2", std::move(scene.loop)});
  const std::string text = scene_to_json(file);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_file(output, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed crossings, flux jumps and flux commutators for loop/surface scenes"};
  app.require_subcommand(1);

  SceneArgs crossings_args;
  auto* crossings = app.add_subcommand("crossings", "List signed crossings of a loop with a surface");
  add_scene_args(crossings, crossings_args);

  SceneArgs commutator_args;
  std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
  std::string commutator_csv;
  auto* commutator = app.add_subcommand("commutator", "Commutator report as JSON");
  add_scene_args(commutator, commutator_args);
  commutator->add_option("--eps", eps, "Excision half-widths (arclength), decreasing")
      ->delimiter(',');
  commutator->add_option("--csv", commutator_csv, "Write the eps convergence table here");

  SceneArgs sweep_args;
  int seeds = 100;
  double amplitude = 0.5;
  std::uint64_t first_seed = 1;
  auto* sweep = app.add_subcommand("sweep", "Signed totals over random boundary-fixed deformations");
  add_scene_args(sweep, sweep_args);
  sweep->add_option("--seeds", seeds, "Number of deformations");
  sweep->add_option("--amplitude", amplitude, "Maximum vertex displacement");
  sweep->add_option("--first-seed", first_seed, "Seed of the first deformation");

  SceneArgs fluxjump_args;
  double q = 1.0;
  std::vector<double> h{0.2, 0.1, 0.05, 0.025};
  int crossing_index = 0;
  std::string fluxjump_csv_path;
  auto* fluxjump = app.add_subcommand("fluxjump", "Flux change of a point charge moved through a crossing");
  fluxjump->set_help_flag("--help", "Print this help message and exit");
  add_scene_args(fluxjump, fluxjump_args);
  fluxjump->add_option("--q", q, "Charge");
  fluxjump->add_option("--h", h, "Probe distances along the normal, decreasing")->delimiter(',');
  fluxjump->add_option("--crossing", crossing_index, "Index into the sorted crossing list");
  fluxjump->add_option("--csv", fluxjump_csv_path, "Write the table here as well");

  std::string linking_file, loop_a, loop_b;
  int quad = 4;
  auto* linking = app.add_subcommand("linking", "Gauss linking integral of two loops");
  linking->add_option("scene", linking_file, "Scene JSON file")->required();
  linking->add_option("--a", loop_a, "First loop, or a surface for its boundary (default: first surface)");
  linking->add_option("--b", loop_b, "Second loop (default: first loop)");
  linking->add_option("--quad", quad, "Gauss-Legendre points per segment");

  double dE = 1, dB = 1, l = 1;
  auto* uncertainty = app.add_subcommand("uncertainty", "Evaluate the field-fluctuation bound");
  uncertainty->add_option("--dE", dE)->required();
  uncertainty->add_option("--dB", dB)->required();
  uncertainty->add_option("--l", l)->required();

  std::string scene_kind, scene_out;
  auto* scene = app.add_subcommand("scene", "Write a built-in scene (hopf, unlinked, dome3, degenerate)");
  scene->add_option("kind", scene_kind)->required();
  scene->add_option("-o,--output", scene_out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*crossings) return run_crossings(crossings_args);
    if (*commutator) return run_commutator(commutator_args, eps, commutator_csv);
    if (*sweep) return run_sweep(sweep_args, seeds, amplitude, first_seed);
    if (*fluxjump) return run_fluxjump(fluxjump_args, q, h, crossing_index, fluxjump_csv_path);
    if (*linking) return run_linking(linking_file, loop_a, loop_b, quad);
    if (*uncertainty) return run_uncertainty(dE, dB, l);
    if (*scene) return run_scene(scene_kind, scene_out);
  } catch (const DegenerateIncidence& e) {
    std::cerr << "fluxcomm: degenerate geometry: " << e.what()
              << " (rerun with --perturb <seed>)\n";
    return kExitDegenerate;
  } catch (const PointOnSurface& e) {
    std::cerr << "fluxcomm: degenerate geometry: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const LoopsTouch& e) {
    std::cerr << "fluxcomm: degenerate geometry: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const Error& e) {
    std::cerr << "fluxcomm: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
