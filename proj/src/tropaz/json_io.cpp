#include "tropaz/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tropaz/mp.hpp"

namespace tropaz {

namespace {

EdgeRef parse_edge_key(const std::string& key) {
    std::istringstream is(key);
    std::string a, b, c;
    if (!std::getline(is, a, ',') || !std::getline(is, b, ',') || !std::getline(is, c))
        throw ValidationError("MissingEdgeWeight", "bad edge key '" + key + "'");
    EdgeRef e;
    try {
        e.i = std::stoi(a);
        e.j = std::stoi(b);
    } catch (const std::exception&) {
        throw ValidationError("MissingEdgeWeight", "bad edge key '" + key + "'");
    }
    e.type = parse_edge_type(c);
    return e;
}

Rational json_rational(const Json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ValidationError("MalformedRational", "weights must be integers or rational strings");
}

// Nearest rational with denominator 2^60 to log(value), computed at the
// current working precision.
Rational log_to_rational(const Rational& value) {
    Real x = log(to_real(value));
    BigInt den = BigInt(1) << 60;
    Real scaled = x * Real(den.str());
    BigInt num(boost::multiprecision::round(scaled).convert_to<BigInt>());
    return Rational(num, den);
}

} // namespace

Rational parse_number(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("MalformedRational", "bad decimal '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    Rational integral = head.empty() || head == "-" || head == "+" ? Rational(0)
                                                                   : parse_rational(head);
    BigInt den = 1;
    for (std::size_t d = 0; d < tail.size(); ++d) den *= 10;
    Rational frac = tail.empty() ? Rational(0) : Rational(BigInt(tail), den);
    return negative ? integral - frac : integral + frac;
}

ConfigLoad load_config_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& ex) {
        throw ValidationError("ConfigError", std::string("config is not valid JSON: ") + ex.what());
    }
    if (!doc.contains("k") || !doc.contains("ell"))
        throw ValidationError("ConfigError", "config must contain 'k' and 'ell'");
    int k = doc["k"].get<int>();
    int ell = doc["ell"].get<int>();

    ConfigLoad out;
    out.raw_bytes = text;
    std::map<EdgeRef, Rational> logw;
    if (doc.contains("logw")) {
        for (auto& [key, value] : doc["logw"].items())
            logw[parse_edge_key(key)] = json_rational(value);
    } else if (doc.contains("nu")) {
        out.warnings.push_back(
            "decimal nu values: log-weights rounded to rationals; genericity checks are "
            "approximate for this input");
        for (auto& [key, value] : doc["nu"].items()) {
            Rational nu = value.is_string() ? parse_number(value.get<std::string>())
                                            : json_rational(value);
            if (nu <= 0)
                throw ValidationError("ConfigError", "nu values must be positive");
            logw[parse_edge_key(key)] = log_to_rational(nu);
        }
    } else {
        throw ValidationError("ConfigError", "config must contain 'logw' (or 'nu')");
    }
    out.domain = make_fundamental_domain(k, ell, std::move(logw));
    return out;
}

ConfigLoad load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("ConfigError", "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str());
}

Json emit_config(const FundamentalDomain& domain) {
    Json doc;
    doc["k"] = domain.k;
    doc["ell"] = domain.ell;
    Json logw = Json::object();
    for (const auto& [e, w] : domain.logw) logw[edge_ref_string(e)] = rational_string(w);
    doc["logw"] = logw;
    return doc;
}

Json vec2q_json(const Vec2Q& v) { return Json::array({rational_string(v.x), rational_string(v.y)}); }

Json vec2i_json(const Vec2I& v) { return Json::array({v.x, v.y}); }

Vec2I parse_vec2i(const Json& j) { return {j.at(0).get<long>(), j.at(1).get<long>()}; }

Json emit_tension(const SurfaceTensionTable& table, const GenericityReport& generic) {
    Json doc;
    doc["k"] = table.k;
    doc["ell"] = table.ell;
    doc["smooth"] = generic.smooth;
    Json entries = Json::array();
    for (const auto& [mu, entry] : table.entries) {
        Json e;
        e["mu"] = vec2i_json(mu);
        e["estar"] = rational_string(entry.estar);
        e["n_max"] = entry.maximizers.size();
        e["n_covers"] = entry.n_covers;
        entries.push_back(e);
    }
    doc["entries"] = entries;
    return doc;
}

std::map<Vec2I, std::pair<Rational, std::pair<long, long>>> parse_tension(const Json& doc) {
    std::map<Vec2I, std::pair<Rational, std::pair<long, long>>> out;
    for (const Json& e : doc.at("entries")) {
        Vec2I mu = parse_vec2i(e.at("mu"));
        out[mu] = {parse_rational(e.at("estar").get<std::string>()),
                   {e.at("n_max").get<long>(), e.at("n_covers").get<long>()}};
    }
    return out;
}

Json emit_subdivision(const Subdivision& sub, const GenericityReport& generic) {
    Json doc;
    doc["k"] = sub.k;
    doc["ell"] = sub.ell;
    Json points = Json::array();
    std::map<Vec2I, int> point_index;
    for (const auto& [mu, lift] : sub.lift) {
        point_index[mu] = static_cast<int>(points.size());
        Json p;
        p["mu"] = vec2i_json(mu);
        p["estar"] = rational_string(lift);
        points.push_back(p);
    }
    doc["points"] = points;
    Json faces = Json::array();
    for (const SubFace& f : sub.faces) {
        Json ids = Json::array();
        for (const Vec2I& v : f.poly) ids.push_back(point_index.at(v));
        faces.push_back(ids);
    }
    doc["faces"] = faces;
    Json edges = Json::array();
    for (const SubEdge& e : sub.edges) {
        Json j;
        j["u"] = point_index.at(e.u);
        j["v"] = point_index.at(e.v);
        j["faces"] = e.boundary() ? Json::array({e.face0}) : Json::array({e.face0, e.face1});
        if (e.boundary()) {
            const char* names[4] = {"left", "bottom", "right", "top"};
            j["side"] = names[e.side];
        }
        edges.push_back(j);
    }
    doc["edges"] = edges;
    doc["smooth"] = generic.smooth;
    Json reasons = Json::array();
    for (const GenericityIssue& issue : generic.reasons) {
        Json r;
        r["kind"] = issue.kind;
        Json pts = Json::array();
        for (const Vec2I& p : issue.points) pts.push_back(vec2i_json(p));
        r["points"] = pts;
        reasons.push_back(r);
    }
    doc["violations"] = reasons;
    return doc;
}

Json emit_curve(const TropicalCurve& curve) {
    Json doc;
    doc["k"] = curve.k;
    doc["ell"] = curve.ell;
    Json vertices = Json::array();
    for (const CurveVertex& v : curve.vertices) {
        Json j;
        j["pos"] = vec2q_json(v.pos);
        j["dual_face"] = v.face;
        vertices.push_back(j);
    }
    doc["vertices"] = vertices;
    Json edges = Json::array();
    for (const CurveEdge& e : curve.edges) {
        Json j;
        j["from"] = e.v_from;
        j["to"] = e.v_to;
        j["eta"] = vec2i_json(e.eta);
        j["length"] = rational_string(e.length);
        j["dual_edge"] = e.dual_edge;
        edges.push_back(j);
    }
    doc["edges"] = edges;
    Json leaves = Json::array();
    const char* groups[4] = {"L1", "L2", "L3", "L4"};
    for (const CurveLeaf& l : curve.leaves) {
        Json j;
        j["vertex"] = l.vertex;
        j["eta_in"] = vec2i_json(l.eta_in);
        j["group"] = groups[static_cast<int>(l.group)];
        j["line"] = rational_string(l.line_coord);
        j["dual_edge"] = l.dual_edge;
        leaves.push_back(j);
    }
    doc["leaves"] = leaves;
    return doc;
}

Json emit_kirchhoff(const Subdivision& sub, const TropicalCurve& curve,
                    const DualActionFunction& fstar, const PrimalGradients& primal) {
    Json doc;
    doc["gauge_mu0"] = vec2i_json(fstar.gauge_mu0);
    Json values = Json::array();
    for (const auto& [mu, v] : fstar.fstar) {
        Json j;
        j["mu"] = vec2i_json(mu);
        j["fstar"] = rational_string(v);
        values.push_back(j);
    }
    doc["fstar"] = values;
    Json grads = Json::array();
    for (const Vec2Q& g : fstar.face_gradients) grads.push_back(vec2q_json(g));
    doc["face_gradients"] = grads;
    Json df = Json::array();
    for (std::size_t e = 0; e < curve.edges.size(); ++e) {
        Json j;
        j["edge"] = e;
        j["eta"] = vec2i_json(curve.edges[e].eta);
        j["df_t"] = rational_string(primal.df.edge_values[e]);
        df.push_back(j);
    }
    doc["df_edges"] = df;
    Json leaves = Json::array();
    for (std::size_t l = 0; l < curve.leaves.size(); ++l)
        leaves.push_back(rational_string(primal.df.leaf_values[l]));
    doc["df_leaves_inward"] = leaves;
    Json vg = Json::array();
    for (const Vec2Q& g : primal.vertex_gradients) vg.push_back(vec2q_json(g));
    doc["vertex_gradients"] = vg;
    (void)sub;
    return doc;
}

Json emit_arctic(const ActionContext& ctx, const ArcticCurveGeometry& geom) {
    Json doc;
    doc["k"] = ctx.k();
    doc["ell"] = ctx.ell();
    Json psi = Json::array();
    for (const Vec2Q& p : geom.psi) psi.push_back(vec2q_json(p));
    doc["psi"] = psi;
    Json segments = Json::array();
    for (const ArcticSegment& s : geom.segments) {
        Json j;
        j["edge"] = s.edge;
        j["p0"] = vec2q_json(s.p0);
        j["p1"] = vec2q_json(s.p1);
        j["degenerate"] = s.degenerate;
        segments.push_back(j);
    }
    doc["segments"] = segments;
    Json regions = Json::array();
    for (const RegionPolygon& r : geom.regions) {
        Json j;
        j["mu"] = vec2i_json(r.mu);
        j["empty"] = r.empty;
        Json poly = Json::array();
        for (const Vec2Q& p : r.polygon) poly.push_back(vec2q_json(p));
        j["polygon"] = poly;
        regions.push_back(j);
    }
    doc["regions"] = regions;
    return doc;
}

Json emit_limitshape_grid(const ActionContext& ctx, int rows, int cols) {
    Json doc;
    doc["rows"] = rows;
    doc["cols"] = cols;
    Json grid = Json::array();
    for (int r = 0; r < rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < cols; ++c) {
            Rational u = Rational(-(2 * c + 1)) / (2 * cols * ctx.ell());
            Rational v = Rational(-(2 * r + 1)) / (2 * rows * ctx.k());
            Json cell;
            cell["u"] = rational_string(u);
            cell["v"] = rational_string(v);
            cell["h"] = rational_string(limit_shape(ctx, u, v));
            row.push_back(cell);
        }
        grid.push_back(row);
    }
    doc["grid"] = grid;
    return doc;
}

} // namespace tropaz
