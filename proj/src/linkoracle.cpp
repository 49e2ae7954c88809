#include "fluxcomm/linkoracle.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fluxcomm {

namespace {

struct Rule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre nodes by Newton iteration on P_n, mapped to [0, 1].
Rule gauss_legendre(int n) {
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // 2/((1-x^2)P'^2) halved
  }
  return rule;
}

}  // namespace

double gauss_linking(const OrientedLoop& loop_a, const OrientedLoop& loop_b, int quad_order) {
  if (quad_order < 1 || quad_order > 16) {
    throw InvalidInput("gauss_linking: quad_order must be in [1, 16], got " +
                       std::to_string(quad_order));
  }
  const double gap = loop_distance(loop_a, loop_b);
  if (gap <= kTolGeom) throw LoopsTouch("loops are " + std::to_string(gap) + " apart");

  const Rule rule = gauss_legendre(quad_order);
  double total = 0.0;
  for (std::size_t i = 0; i < loop_a.size(); ++i) {
    const Vec3& a0 = loop_a.segment_start(i);
    const Vec3 da = loop_a.segment_end(i) - a0;
    for (std::size_t j = 0; j < loop_b.size(); ++j) {
      const Vec3& b0 = loop_b.segment_start(j);
      const Vec3 db = loop_b.segment_end(j) - b0;
      const Vec3 tangent_cross = da.cross(db);
      double pair = 0.0;
      for (int u = 0; u < quad_order; ++u) {
        const Vec3 r1 = a0 + rule.nodes[u] * da;
        for (int v = 0; v < quad_order; ++v) {
          const Vec3 r = r1 - (b0 + rule.nodes[v] * db);
          const double dist = r.norm();
          pair += rule.weights[u] * rule.weights[v] * r.dot(tangent_cross) / (dist * dist * dist);
        }
      }
      total += pair;
    }
  }
  return total / kFourPi;
}

}  // namespace fluxcomm
