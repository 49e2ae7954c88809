#pragma once

#include "fluxcomm/geom.hpp"

namespace fluxcomm {

/// Gauss double-integral linking number of two closed polylines, using a
/// `quad_order`-point Gauss-Legendre rule on every segment pair.
/// Independent of any spanning surface. Throws LoopsTouch when the loops come
/// within kTolGeom of each other, InvalidInput for quad_order outside [1, 16].
double gauss_linking(const OrientedLoop& loop_a, const OrientedLoop& loop_b, int quad_order = 4);

}  // namespace fluxcomm
