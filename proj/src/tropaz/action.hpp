#ifndef TROPAZ_ACTION_HPP
#define TROPAZ_ACTION_HPP

#include <map>
#include <optional>
#include <vector>

#include "tropaz/kirchhoff.hpp"

namespace tropaz {

// Everything the tropical action needs, built once per weight file.
struct ActionContext {
    const Subdivision* sub = nullptr;
    const TropicalCurve* curve = nullptr;
    const DualActionFunction* fstar = nullptr;
    const PrimalGradients* primal = nullptr;

    int k() const { return curve->k; }
    int ell() const { return curve->ell; }
    bool in_domain_open(const Vec2Q& uv) const;   // (u,v) in D_Az
    bool in_domain_closed(const Vec2Q& uv) const; // closure
};

// dF_t(eta; u, v) as a OneForm (canonical edge orientation, inward leaves).
struct ActionSlopes {
    Vec2Q uv;
    OneForm values;
};

ActionSlopes action_slopes(const ActionContext& ctx, const Rational& u, const Rational& v);

struct VZero {
    int vertex;
    Vec2I mu;     // component it is a v-zero with respect to
    bool triple;
};

struct EZero {
    int edge;
    bool double_zero;
};

struct ZeroReport {
    std::vector<VZero> v_zeros;
    std::vector<EZero> e_zeros;
    std::map<Vec2I, long> z; // Z_mu counts
    bool has_triple = false;
    bool has_double_e = false;
    long double_e_count = 0;
};

ZeroReport classify_zeros(const ActionContext& ctx, const ActionSlopes& slopes);

struct Phase {
    enum class Kind { Frozen, Smooth, ArcticCurve } kind;
    std::optional<Vec2I> mu; // set for Frozen and Smooth
};

Phase classify_point(const ActionContext& ctx, const Rational& u, const Rational& v);

// Psi_t(v) = (1/kl) (d_y f_t(v) - k, -d_x f_t(v) - ell).
std::vector<Vec2Q> vertex_map(const ActionContext& ctx);

struct ArcticSegment {
    int edge;       // bounded curve edge
    Vec2Q p0, p1;   // Psi images of v_from and v_to
    bool degenerate; // p0 == p1
};

struct RegionPolygon {
    Vec2I mu;
    bool empty = false;
    // Counterclockwise polygon; image_vertex[p] is the curve vertex whose
    // Psi image the corner is (several when images merge), empty for corners
    // of D_Az inserted by the boundary closure.
    std::vector<Vec2Q> polygon;
    std::vector<std::vector<int>> image_vertices;
};

struct ArcticCurveGeometry {
    std::vector<Vec2Q> psi; // per curve vertex
    std::vector<ArcticSegment> segments;
    std::vector<RegionPolygon> regions;
};

ArcticCurveGeometry arctic_curve(const ActionContext& ctx);

// The tropical limit shape; extends continuously to the arctic curve.
Rational limit_shape(const ActionContext& ctx, const Rational& u, const Rational& v);

// Facet formula for a fixed mu (valid on the closure of R_mu).
Rational limit_shape_facet(const ActionContext& ctx, const Vec2I& mu, const Rational& u,
                           const Rational& v);

// Path-sum formula over Gamma_mu (edges of the curve dual to a subdivision
// edge path from mu to mu0 = (0, k)).
Rational limit_shape_gamma(const ActionContext& ctx, const Vec2I& mu, const Rational& u,
                           const Rational& v);

struct GeometryReport {
    bool pass = false;
    std::vector<std::string> violations;
    // Count of n_v = 1 vertices per nonempty region.
    std::map<Vec2I, int> n1_counts;
};

// Angle relation theta = n*pi - theta' (n in {1,2}), n=1 counts 4/3/2 for
// S/Q/F, rotation reversal and one-side property of neighbor images.
GeometryReport verify_geometry(const ActionContext& ctx, const ArcticCurveGeometry& geometry,
                               double tol = 1e-9);

} // namespace tropaz

#endif
