#include "fluxcomm/crossings.hpp"

#include <algorithm>

namespace fluxcomm {

CrossingSet signed_crossings(const TriSurface& surface, const OrientedLoop& loop) {
  CrossingSet out;
  const double length = loop.length();
  for (std::size_t seg = 0; seg < loop.size(); ++seg) {
    const Vec3& a = loop.segment_start(seg);
    const Vec3& b = loop.segment_end(seg);
    for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
      const auto hit = segment_triangle_intersection(a, b, surface.triangle(t));
      if (!hit) continue;
      const double arc = loop.arclength_at_vertex(seg) + hit->s * loop.segment_length(seg);
      out.crossings.push_back(Crossing{hit->point, static_cast<int>(t), arc / length, hit->sign,
                                       static_cast<int>(seg), hit->s});
      out.total += hit->sign;
    }
  }
  std::sort(out.crossings.begin(), out.crossings.end(), [](const Crossing& x, const Crossing& y) {
    return x.loop_arc_parameter < y.loop_arc_parameter;
  });
  return out;
}

}  // namespace fluxcomm
