#pragma once

#include <string>

#include "tropcurv/amoeba.hpp"
#include "tropcurv/patchwork.hpp"
#include "tropcurv/tropical.hpp"

namespace tropcurv {

/// Newton polytope with its dual subdivision and the sign at each exponent
/// (plane curves only; throws NotPlaneCurve otherwise).
std::string render_newton_svg(const DualSubdivision& s, const SignDistribution& theta);

/// Tropical plane curve: vertices, bounded edges and clipped rays.
std::string render_curve_svg(const HypersurfaceComplex& h);

/// Real part. Plane curves: one panel per quadrant with present copies
/// solid and absent copies dashed. Surfaces (ambient dimension 3): one
/// wireframe panel per orthant, present edges only, isometric projection.
std::string render_real_part_svg(const HypersurfaceComplex& h, const RealPart& rp);

/// Traced amoeba polylines per quadrant in log_t coordinates.
std::string render_amoeba_svg(const TracedCurve& tc);

}  // namespace tropcurv
