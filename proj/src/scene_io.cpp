#include "fluxcomm/scene_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fluxcomm {

namespace {

using nlohmann::ordered_json;

Vec3 parse_point(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw InvalidInput(where + ": expected [x, y, z]");
  Vec3 p;
  for (int k = 0; k < 3; ++k) {
    if (!j[k].is_number()) throw InvalidInput(where + ": coordinate is not a number");
    p[k] = j[k].get<double>();
  }
  return p;
}

std::vector<Vec3> parse_points(const nlohmann::json& obj, const std::string& where) {
  if (!obj.contains("vertices") || !obj["vertices"].is_array()) {
    throw InvalidInput(where + ": missing \"vertices\" array");
  }
  std::vector<Vec3> pts;
  for (std::size_t i = 0; i < obj["vertices"].size(); ++i) {
    pts.push_back(parse_point(obj["vertices"][i], where + " vertex " + std::to_string(i)));
  }
  return pts;
}

std::string parse_name(const nlohmann::json& obj, const std::string& where) {
  if (!obj.contains("name") || !obj["name"].is_string()) {
    throw InvalidInput(where + ": missing \"name\" string");
  }
  return obj["name"].get<std::string>();
}

ordered_json points_json(const std::vector<Vec3>& pts) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) arr.push_back({p.x(), p.y(), p.z()});
  return arr;
}

void dump_into(std::string& out, const ordered_json& v, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (v.type()) {
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + ordered_json(key).dump() + ": ";
        dump_into(out, item, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(v.begin(), v.end(), [](const ordered_json& e) {
        return e.is_structured();
      });
      out += flat ? "[" : "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += flat ? ", " : ",\n";
        if (!flat) out += pad;
        dump_into(out, v[i], indent, depth + 1);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += std::isfinite(v.get<double>()) ? format_double(v.get<double>()) : "null";
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

const OrientedLoop& SceneFile::loop(std::string_view name) const {
  if (loops.empty()) throw InvalidInput("scene has no loops");
  if (name.empty()) return loops.front().loop;
  for (const auto& l : loops) {
    if (l.name == name) return l.loop;
  }
  throw InvalidInput("scene has no loop named \"" + std::string(name) + "\"");
}

const TriSurface& SceneFile::surface(std::string_view name) const {
  if (surfaces.empty()) throw InvalidInput("scene has no surfaces");
  if (name.empty()) return surfaces.front().surface;
  for (const auto& s : surfaces) {
    if (s.name == name) return s.surface;
  }
  throw InvalidInput("scene has no surface named \"" + std::string(name) + "\"");
}

SceneFile parse_scene(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("scene JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("scene JSON: top level must be an object");

  SceneFile scene;
  if (doc.contains("loops")) {
    if (!doc["loops"].is_array()) throw InvalidInput("scene JSON: \"loops\" must be an array");
    for (std::size_t i = 0; i < doc["loops"].size(); ++i) {
      const auto& obj = doc["loops"][i];
      const std::string where = "loop " + std::to_string(i);
      scene.loops.push_back({parse_name(obj, where), OrientedLoop(parse_points(obj, where))});
    }
  }
  if (doc.contains("surfaces")) {
    if (!doc["surfaces"].is_array()) {
      throw InvalidInput("scene JSON: \"surfaces\" must be an array");
    }
    for (std::size_t i = 0; i < doc["surfaces"].size(); ++i) {
      const auto& obj = doc["surfaces"][i];
      const std::string where = "surface " + std::to_string(i);
      if (!obj.contains("triangles") || !obj["triangles"].is_array()) {
        throw InvalidInput(where + ": missing \"triangles\" array");
      }
      std::vector<TriangleIndices> tris;
      for (const auto& t : obj["triangles"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_number_integer()) {
          throw InvalidInput(where + ": triangle must be [i, j, k] integers");
        }
        tris.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
      }
      scene.surfaces.push_back({parse_name(obj, where),
                                TriSurface(parse_points(obj, where), std::move(tris))});
    }
  }
  return scene;
}

SceneFile load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open scene file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const ordered_json& value, int indent) {
  std::string out;
  dump_into(out, value, indent, 0);
  out += "\n";
  return out;
}

std::string scene_to_json(const SceneFile& scene) {
  ordered_json doc;
  doc["loops"] = ordered_json::array();
  for (const auto& l : scene.loops) {
    doc["loops"].push_back({{"name", l.name}, {"vertices", points_json(l.loop.vertices())}});
  }
  doc["surfaces"] = ordered_json::array();
  for (const auto& s : scene.surfaces) {
    ordered_json tris = ordered_json::array();
    for (const auto& t : s.surface.triangles()) tris.push_back({t[0], t[1], t[2]});
    doc["surfaces"].push_back({{"name", s.name},
                               {"vertices", points_json(s.surface.vertices())},
                               {"triangles", std::move(tris)}});
  }
  return dump_json(doc, 1);
}

ordered_json report_to_json(const CommutatorReport& r) {
  ordered_json doc;
  doc["delta_kernel"] = r.delta_kernel;
  doc["transverse"] = r.transverse;
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < r.transverse_extrapolation.size(); ++i) {
    table.push_back({{"epsilon", r.transverse_extrapolation[i].first},
                     {"value", r.transverse_extrapolation[i].second},
                     {"arc_count", r.arc_counts[i]}});
  }
  doc["transverse_extrapolation"] = std::move(table);
  doc["extrapolation_residual"] = r.extrapolation_residual;
  doc["observed_order"] = r.observed_order;
  doc["superconductor_units_ihc"] = r.superconductor_units_ihc;
  doc["vacuum_units_ihc"] = r.vacuum_units_ihc;
  doc["charge_flux_units_ihc"] = r.charge_flux_units_ihc;
  return doc;
}

std::string convergence_csv(const CommutatorReport& report) {
  std::string out = "eps,transverse_value,arc_count\n";
  for (std::size_t i = 0; i < report.transverse_extrapolation.size(); ++i) {
    const auto& [eps, value] = report.transverse_extrapolation[i];
    out += format_double(eps) + "," + format_double(value) + "," +
           std::to_string(report.arc_counts[i]) + "\n";
  }
  return out;
}

std::string flux_jump_csv(const FluxJump& jump) {
  std::string out = "h,phi_below,phi_above,jump\n";
  for (const auto& row : jump.rows) {
    out += format_double(row.h) + "," + format_double(row.phi_below) + "," +
           format_double(row.phi_above) + "," + format_double(row.jump) + "\n";
  }
  return out;
}

}  // namespace fluxcomm
