#ifndef TROPAZ_JSON_IO_HPP
#define TROPAZ_JSON_IO_HPP

#include <json.hpp>

#include "tropaz/action.hpp"
#include "tropaz/pipeline.hpp"

namespace tropaz {

using Json = nlohmann::ordered_json;

struct ConfigLoad {
    FundamentalDomain domain;
    std::vector<std::string> warnings;
    std::string raw_bytes;
};

// Parses the UTF-8 JSON weight file: fields "k", "ell" and "logw" (object
// keyed "i,j,Type" with rational string or integer values). A "nu" object of
// positive decimal values is accepted instead of "logw"; the logs are then
// rounded to rationals and a genericity warning is recorded.
ConfigLoad load_config_text(const std::string& text);
ConfigLoad load_config_file(const std::string& path);

Json emit_config(const FundamentalDomain& domain);

// Accepts "p/q", integers and plain decimals ("0.25" -> 1/4).
Rational parse_number(const std::string& text);

Json emit_tension(const SurfaceTensionTable& table, const GenericityReport& generic);
std::map<Vec2I, std::pair<Rational, std::pair<long, long>>> parse_tension(const Json& doc);

Json emit_subdivision(const Subdivision& sub, const GenericityReport& generic);
Json emit_curve(const TropicalCurve& curve);
Json emit_kirchhoff(const Subdivision& sub, const TropicalCurve& curve,
                    const DualActionFunction& fstar, const PrimalGradients& primal);
Json emit_arctic(const ActionContext& ctx, const ArcticCurveGeometry& geom);
Json emit_limitshape_grid(const ActionContext& ctx, int rows, int cols);

Json vec2q_json(const Vec2Q& v);
Json vec2i_json(const Vec2I& v);
Vec2I parse_vec2i(const Json& j);

} // namespace tropaz

#endif
