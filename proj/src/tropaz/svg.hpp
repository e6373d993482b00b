#ifndef TROPAZ_SVG_HPP
#define TROPAZ_SVG_HPP

#include <string>

#include "tropaz/action.hpp"
#include "tropaz/aztec.hpp"

namespace tropaz {

// Deterministic SVG renderings; the manifest comment is prepended by the CLI.
std::string render_subdivision_svg(const Subdivision& sub);
std::string render_curve_svg(const TropicalCurve& curve);
std::string render_arctic_svg(const ActionContext& ctx, const ArcticCurveGeometry& geom);
std::string render_limitshape_svg(const ActionContext& ctx, int rows, int cols);
std::string render_sample_svg(const AztecGraph& graph, const std::vector<int>& cover,
                              const ActionContext* ctx);

} // namespace tropaz

#endif
