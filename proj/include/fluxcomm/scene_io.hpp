#pragma once

#include "fluxcomm/commutator.hpp"
#include "fluxcomm/flux.hpp"
#include "fluxcomm/geom.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fluxcomm {

struct NamedLoop {
  std::string name;
  OrientedLoop loop;
};

struct NamedSurface {
  std::string name;
  TriSurface surface;
};

/// Contents of a scene file:
///   {"loops": [{"name": str, "vertices": [[x,y,z], ...]}, ...],
///    "surfaces": [{"name": str, "vertices": [...], "triangles": [[i,j,k], ...]}, ...]}
/// with 0-based triangle indices.
struct SceneFile {
  std::vector<NamedLoop> loops;
  std::vector<NamedSurface> surfaces;

  /// Empty name selects the first entry. Throws InvalidInput when missing.
  const OrientedLoop& loop(std::string_view name = {}) const;
  const TriSurface& surface(std::string_view name = {}) const;
};

/// Throws InvalidInput on malformed JSON, schema violations or invalid geometry.
SceneFile parse_scene(std::string_view text);
SceneFile load_scene(const std::filesystem::path& path);

/// Doubles are written with 17 significant digits so they read back exactly.
std::string format_double(double x);
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

std::string scene_to_json(const SceneFile& scene);
nlohmann::ordered_json report_to_json(const CommutatorReport& report);

/// Columns: eps, transverse_value, arc_count.
std::string convergence_csv(const CommutatorReport& report);
/// Columns: h, phi_below, phi_above, jump.
std::string flux_jump_csv(const FluxJump& jump);

}  // namespace fluxcomm
