#include "tropaz/action.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace tropaz {

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace

bool ActionContext::in_domain_open(const Vec2Q& uv) const {
    Rational lo_u = Rational(-1) / ell(), lo_v = Rational(-1) / k();
    return uv.x > lo_u && uv.x < 0 && uv.y > lo_v && uv.y < 0;
}

bool ActionContext::in_domain_closed(const Vec2Q& uv) const {
    Rational lo_u = Rational(-1) / ell(), lo_v = Rational(-1) / k();
    return uv.x >= lo_u && uv.x <= 0 && uv.y >= lo_v && uv.y <= 0;
}

ActionSlopes action_slopes(const ActionContext& ctx, const Rational& u, const Rational& v) {
    const TropicalCurve& curve = *ctx.curve;
    const OneForm& df = ctx.primal->df;
    Rational cy = Rational(ctx.k()) * (1 + ctx.ell() * u);  // coefficient of eta_y
    Rational cx = Rational(ctx.ell()) * (1 + ctx.k() * v);  // coefficient of eta_x
    ActionSlopes out;
    out.uv = Vec2Q(u, v);
    out.values.edge_values.resize(curve.edges.size());
    out.values.leaf_values.resize(curve.leaves.size());
    for (std::size_t e = 0; e < curve.edges.size(); ++e) {
        const Vec2I& eta = curve.edges[e].eta;
        out.values.edge_values[e] = cy * eta.y - cx * eta.x - df.edge_values[e];
    }
    for (std::size_t l = 0; l < curve.leaves.size(); ++l) {
        const Vec2I& eta = curve.leaves[l].eta_in;
        out.values.leaf_values[l] = cy * eta.y - cx * eta.x - df.leaf_values[l];
    }
    return out;
}

ZeroReport classify_zeros(const ActionContext& ctx, const ActionSlopes& slopes) {
    const TropicalCurve& curve = *ctx.curve;
    const Subdivision& sub = *ctx.sub;
    ZeroReport report;
    for (const auto& [mu, cb] : curve.components) report.z[mu] = 0;

    auto dual_endpoints = [&](const WalkItem& item) {
        int se = item.leaf ? curve.leaves[item.index].dual_edge : curve.edges[item.index].dual_edge;
        return std::pair<Vec2I, Vec2I>{sub.edges[se].u, sub.edges[se].v};
    };

    // v-zeros: at each vertex, for each corner mu of the dual face, compare
    // the outward slopes of the two incident items bounding A_{t,mu}.
    for (int v = 0; v < static_cast<int>(curve.vertices.size()); ++v) {
        auto inc = curve.incident(v);
        std::vector<Rational> vals;
        for (const auto& item : inc) vals.push_back(slopes.values.on(curve, item.item, item.eta_out));
        bool triple = vals[0] == 0 && vals[1] == 0 && vals[2] == 0;
        if (triple) report.has_triple = true;
        const auto& corners = sub.faces[curve.vertices[v].face].poly;
        for (const Vec2I& mu : corners) {
            std::vector<int> at;
            for (int t = 0; t < 3; ++t) {
                auto [a, b] = dual_endpoints(inc[t].item);
                if (a == mu || b == mu) at.push_back(t);
            }
            if (at.size() != 2)
                throw InternalError("DualityBroken", "component does not meet vertex twice");
            int s1 = sign_of(vals[at[0]]), s2 = sign_of(vals[at[1]]);
            if (triple) {
                report.v_zeros.push_back({v, mu, true});
            } else if (s1 != 0 && s1 == s2) {
                report.v_zeros.push_back({v, mu, false});
                ++report.z[mu];
            }
        }
    }

    // e-zeros: bounded edges where dF_t vanishes but no adjacent item does.
    for (int e = 0; e < static_cast<int>(curve.edges.size()); ++e) {
        if (slopes.values.edge_values[e] != 0) continue;
        const CurveEdge& ce = curve.edges[e];
        bool adjacent_zero = false;
        std::array<std::vector<std::pair<WalkItem, Vec2I>>, 2> others; // per endpoint
        int side = 0;
        for (int v : {ce.v_from, ce.v_to}) {
            for (const auto& item : curve.incident(v)) {
                if (!item.item.leaf && item.item.index == e) continue;
                Rational val = slopes.values.on(curve, item.item, item.eta_out);
                if (val == 0) adjacent_zero = true;
                others[side].push_back({item.item, item.eta_out});
            }
            ++side;
        }
        if (adjacent_zero) continue; // a triple v-zero at an endpoint, not an e-zero
        // Pick one adjacent component containing e and compare the signs of
        // the outward slopes of its other edges at the two endpoints.
        auto [mu_a, mu_b] = dual_endpoints(WalkItem{false, e});
        auto component_value = [&](int endpoint_side, const Vec2I& mu) {
            for (auto& [item, eta] : others[endpoint_side]) {
                auto [a, b] = dual_endpoints(item);
                if (a == mu || b == mu) return slopes.values.on(curve, item, eta);
            }
            throw InternalError("DualityBroken", "edge component missing at endpoint");
        };
        int sa = sign_of(component_value(0, mu_a));
        int sb = sign_of(component_value(1, mu_a));
        bool dbl = (sa != sb);
        report.e_zeros.push_back({e, dbl});
        if (dbl) {
            report.has_double_e = true;
            ++report.double_e_count;
        } else {
            ++report.z[mu_a];
            ++report.z[mu_b];
        }
    }
    return report;
}

Phase classify_point(const ActionContext& ctx, const Rational& u, const Rational& v) {
    if (!ctx.in_domain_open(Vec2Q(u, v)))
        throw ValidationError("OutsideDomain", "(u,v) must lie in the open rectangle D_Az");
    ActionSlopes slopes = action_slopes(ctx, u, v);
    ZeroReport report = classify_zeros(ctx, slopes);
    if (report.has_triple || report.has_double_e) return {Phase::Kind::ArcticCurve, std::nullopt};
    NewtonPolygon np = ctx.sub->polygon();
    for (const auto& [mu, count] : report.z) {
        switch (np.classify(mu)) {
            case PointClass::Corner:
                if (count == 2) return {Phase::Kind::Frozen, mu};
                break;
            case PointClass::Boundary:
                if (count == 3) return {Phase::Kind::Frozen, mu};
                break;
            case PointClass::Interior:
                if (count == 4) return {Phase::Kind::Smooth, mu};
                break;
        }
    }
    return {Phase::Kind::ArcticCurve, std::nullopt};
}

std::vector<Vec2Q> vertex_map(const ActionContext& ctx) {
    Rational kl = Rational(ctx.k()) * ctx.ell();
    std::vector<Vec2Q> psi;
    for (std::size_t v = 0; v < ctx.curve->vertices.size(); ++v) {
        const Vec2Q& g = ctx.primal->vertex_gradients[v];
        Vec2Q image((g.y - ctx.k()) / kl, (-g.x - ctx.ell()) / kl);
        if (!ctx.in_domain_closed(image))
            throw InternalError("ImageOutsideDomain", "Psi_t image escapes closure(D_Az)");
        psi.push_back(image);
    }
    return psi;
}

namespace {

// Clockwise parameterization of the boundary of D_Az in [0, 4): corners
// top-left 0, top-right 1, bottom-right 2, bottom-left 3.
Rational boundary_param(const Vec2Q& p, int k, int ell) {
    Rational lu = Rational(-1) / ell, lv = Rational(-1) / k;
    if (p.y == 0 && p.x == lu) return 0; // top-left corner canonical
    if (p.y == 0) return (p.x - lu) * ell;
    if (p.x == 0) return 1 + (-p.y) * k;
    if (p.y == lv) return 2 + (-p.x) * ell;
    if (p.x == lu) return 3 + (p.y - lv) * k;
    throw InternalError("NotOnBoundary", "point not on the boundary of D_Az");
}

Vec2Q boundary_corner(long t, int k, int ell) {
    Rational lu = Rational(-1) / ell, lv = Rational(-1) / k;
    switch (((t % 4) + 4) % 4) {
        case 0: return Vec2Q(lu, Rational(0));
        case 1: return Vec2Q(Rational(0), Rational(0));
        case 2: return Vec2Q(Rational(0), lv);
        default: return Vec2Q(lu, lv);
    }
}

Rational polygon_area2(const std::vector<Vec2Q>& poly) {
    Rational s = 0;
    for (std::size_t p = 0; p < poly.size(); ++p) {
        const Vec2Q& a = poly[p];
        const Vec2Q& b = poly[(p + 1) % poly.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s;
}

} // namespace

ArcticCurveGeometry arctic_curve(const ActionContext& ctx) {
    const TropicalCurve& curve = *ctx.curve;
    ArcticCurveGeometry geom;
    geom.psi = vertex_map(ctx);

    for (int e = 0; e < static_cast<int>(curve.edges.size()); ++e) {
        ArcticSegment seg;
        seg.edge = e;
        seg.p0 = geom.psi[curve.edges[e].v_from];
        seg.p1 = geom.psi[curve.edges[e].v_to];
        seg.degenerate = (seg.p0 == seg.p1);
        geom.segments.push_back(seg);
    }

    for (const auto& [mu, cb] : curve.components) {
        RegionPolygon region;
        region.mu = mu;
        std::vector<Vec2Q> pts;
        std::vector<std::vector<int>> who;
        for (int v : cb.vertices) {
            Vec2Q p = geom.psi[v];
            if (!pts.empty() && pts.back() == p) {
                who.back().push_back(v);
            } else {
                pts.push_back(p);
                who.push_back({v});
            }
        }
        if (cb.closed) {
            while (pts.size() > 1 && pts.front() == pts.back()) {
                for (int v : who.back()) who.front().push_back(v);
                pts.pop_back();
                who.pop_back();
            }
        } else if (!pts.empty()) {
            // Close along the boundary of D_Az clockwise (region stays on the
            // right of the traversal), inserting the rectangle corners passed.
            Rational t_end = boundary_param(pts.back(), ctx.k(), ctx.ell());
            Rational t_start = boundary_param(pts.front(), ctx.k(), ctx.ell());
            if (t_end != t_start) {
                Rational span = t_start - t_end;
                if (span < 0) span += 4;
                for (long c = 1; c <= 4; ++c) {
                    Rational tc = t_end.convert_to<long>() + c; // next integer params
                    Rational delta = tc - t_end;
                    if (delta <= 0) continue;
                    if (delta >= span) break;
                    pts.push_back(boundary_corner(t_end.convert_to<long>() + c, ctx.k(), ctx.ell()));
                    who.push_back({});
                }
            }
        }
        region.polygon = pts;
        region.image_vertices = who;
        region.empty = pts.size() < 3 || polygon_area2(pts) == 0;
        geom.regions.push_back(std::move(region));
    }
    return geom;
}

Rational limit_shape_facet(const ActionContext& ctx, const Vec2I& mu, const Rational& u,
                           const Rational& v) {
    Vec2I mu0 = ctx.fstar->gauge_mu0;
    Rational kl = Rational(ctx.k()) * ctx.ell();
    Rational h = (u + Rational(1) / ctx.ell()) * (mu.x - mu0.x) +
                 (v + Rational(1) / ctx.k()) * (mu.y - mu0.y) +
                 (ctx.fstar->at(mu) - ctx.fstar->at(mu0)) / kl + 1;
    return h;
}

Rational limit_shape_gamma(const ActionContext& ctx, const Vec2I& mu, const Rational& u,
                           const Rational& v) {
    const Subdivision& sub = *ctx.sub;
    const TropicalCurve& curve = *ctx.curve;
    Vec2I mu0 = ctx.fstar->gauge_mu0;

    // Deterministic BFS path from mu to mu0 in the subdivision 1-skeleton.
    std::map<Vec2I, std::pair<Vec2I, int>> parent; // node -> (previous, sub-edge)
    std::queue<Vec2I> bfs;
    bfs.push(mu);
    parent[mu] = {mu, -1};
    while (!bfs.empty() && !parent.count(mu0)) {
        Vec2I at = bfs.front();
        bfs.pop();
        for (int se : sub.edges_at(at)) {
            Vec2I other = (sub.edges[se].u == at) ? sub.edges[se].v : sub.edges[se].u;
            if (parent.count(other)) continue;
            parent[other] = {at, se};
            bfs.push(other);
        }
    }
    if (!parent.count(mu0)) throw InternalError("Disconnected", "subdivision skeleton");

    ActionSlopes slopes = action_slopes(ctx, u, v);
    std::vector<int> curve_edge_of_subedge(sub.edges.size(), -1);
    std::vector<int> leaf_of_subedge(sub.edges.size(), -1);
    for (int e = 0; e < static_cast<int>(curve.edges.size()); ++e)
        curve_edge_of_subedge[curve.edges[e].dual_edge] = e;
    for (int l = 0; l < static_cast<int>(curve.leaves.size()); ++l)
        leaf_of_subedge[curve.leaves[l].dual_edge] = l;

    Rational sum = 0;
    Vec2I at = mu0;
    while (at != mu) {
        auto [prev, se] = parent.at(at);
        // Path step prev -> at; the crossed curve edge is oriented so that it
        // crosses the step from left to right: eta = cw rotation of the step.
        Vec2I step = at - prev;
        Vec2I eta = primitive(rot_cw(step));
        WalkItem item;
        if (curve_edge_of_subedge[se] >= 0)
            item = {false, curve_edge_of_subedge[se]};
        else
            item = {true, leaf_of_subedge[se]};
        sum += slopes.values.on(curve, item, eta);
        at = prev;
    }
    Rational kl = Rational(ctx.k()) * ctx.ell();
    return sum / kl + 1;
}

Rational limit_shape(const ActionContext& ctx, const Rational& u, const Rational& v) {
    Phase phase = classify_point(ctx, u, v);
    if (phase.kind != Phase::Kind::ArcticCurve) return limit_shape_facet(ctx, *phase.mu, u, v);

    // On the arctic curve: evaluate the facet formulas of every component
    // flanking a higher-order zero; continuity makes them agree.
    ActionSlopes slopes = action_slopes(ctx, u, v);
    ZeroReport report = classify_zeros(ctx, slopes);
    std::vector<Vec2I> candidates;
    for (const EZero& ez : report.e_zeros) {
        if (!ez.double_zero) continue;
        const SubEdge& se = ctx.sub->edges[ctx.curve->edges[ez.edge].dual_edge];
        candidates.push_back(se.u);
        candidates.push_back(se.v);
    }
    for (const VZero& vz : report.v_zeros)
        if (vz.triple) candidates.push_back(vz.mu);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty())
        throw InternalError("ArcticClassification", "arctic point without flanking zero");
    Rational value = limit_shape_facet(ctx, candidates[0], u, v);
    for (const Vec2I& mu : candidates)
        if (limit_shape_facet(ctx, mu, u, v) != value)
            throw InternalError("ArcticClassification",
                                "flanking facet formulas disagree on the arctic curve");
    return value;
}

namespace {

double interior_angle(const Vec2Q& prev, const Vec2Q& cur, const Vec2Q& next) {
    double ax = to_double(next.x - cur.x), ay = to_double(next.y - cur.y);
    double bx = to_double(prev.x - cur.x), by = to_double(prev.y - cur.y);
    double phi = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    if (phi <= 0) phi += 2 * M_PI;
    return phi;
}

} // namespace

GeometryReport verify_geometry(const ActionContext& ctx, const ArcticCurveGeometry& geometry,
                               double tol) {
    const TropicalCurve& curve = *ctx.curve;
    GeometryReport report;
    NewtonPolygon np = ctx.sub->polygon();
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

    // Angle relation per nonempty region.
    for (const RegionPolygon& region : geometry.regions) {
        if (region.empty) continue;
        std::vector<Vec2Q> poly = region.polygon;
        std::vector<std::vector<int>> who = region.image_vertices;
        if (polygon_area2(poly) < 0) { // orient counterclockwise
            std::reverse(poly.begin(), poly.end());
            std::reverse(who.begin(), who.end());
        }
        const ComponentBoundary& cb = curve.components.at(region.mu);
        int n1 = 0;
        for (std::size_t p = 0; p < poly.size(); ++p) {
            if (who[p].empty()) continue; // rectangle corner from the closure
            double theta = interior_angle(poly[(p + poly.size() - 1) % poly.size()], poly[p],
                                          poly[(p + 1) % poly.size()]);
            double theta_prime = 0;
            for (int v : who[p]) {
                // The component's two incident items at v span the sector of
                // A_{t,mu} at v; the third incident direction singles it out.
                std::vector<Vec2I> comp_dirs;
                Vec2I other_dir{0, 0};
                for (const auto& item : curve.incident(v)) {
                    int se = item.item.leaf ? curve.leaves[item.item.index].dual_edge
                                            : curve.edges[item.item.index].dual_edge;
                    const SubEdge& s = ctx.sub->edges[se];
                    if (s.u == region.mu || s.v == region.mu)
                        comp_dirs.push_back(item.eta_out);
                    else
                        other_dir = item.eta_out;
                }
                if (comp_dirs.size() != 2) continue;
                double a1 = std::atan2((double)comp_dirs[0].y, (double)comp_dirs[0].x);
                double a2 = std::atan2((double)comp_dirs[1].y, (double)comp_dirs[1].x);
                double span = a2 - a1;
                while (span <= 0) span += 2 * M_PI;
                double ao = std::atan2((double)other_dir.y, (double)other_dir.x);
                double off = ao - a1;
                while (off <= 0) off += 2 * M_PI;
                double angle = (off < span) ? 2 * M_PI - span : span;
                theta_prime += angle;
            }
            int n = static_cast<int>(std::lround((theta + theta_prime) / M_PI));
            if (n != 1 && n != 2) {
                std::ostringstream os;
                os << "angle relation n=" << n << " at a vertex of region (" << region.mu.x << ","
                   << region.mu.y << ")";
                fail(os.str());
                continue;
            }
            if (std::abs(theta - (n * M_PI - theta_prime)) > tol) {
                std::ostringstream os;
                os << "angle mismatch in region (" << region.mu.x << "," << region.mu.y << ")";
                fail(os.str());
            }
            if (n == 1) ++n1;
        }
        report.n1_counts[region.mu] = n1;
        int expected = 0;
        switch (np.classify(region.mu)) {
            case PointClass::Interior: expected = 4; break;
            case PointClass::Boundary: expected = 3; break;
            case PointClass::Corner: expected = 2; break;
        }
        if (n1 != expected) {
            std::ostringstream os;
            os << "region (" << region.mu.x << "," << region.mu.y << ") has " << n1
               << " convex corners, expected " << expected;
            fail(os.str());
        }
    }

    // Orientation reversal and the one-side property at vertices whose three
    // neighbors are all curve vertices with distinct images.
    for (int v = 0; v < static_cast<int>(curve.vertices.size()); ++v) {
        auto inc = curve.incident(v);
        std::vector<std::pair<Vec2I, Vec2Q>> nbrs; // (eta_out, Psi(v_i) - Psi(v))
        bool ok = true;
        for (const auto& item : inc) {
            if (item.item.leaf) {
                ok = false;
                break;
            }
            const CurveEdge& e = curve.edges[item.item.index];
            int other = (e.v_from == v) ? e.v_to : e.v_from;
            Vec2Q d = geometry.psi[other] - geometry.psi[v];
            if (d.x == 0 && d.y == 0) {
                ok = false;
                break;
            }
            nbrs.push_back({item.eta_out, d});
        }
        if (!ok || nbrs.size() != 3) continue;
        // One-side: all image differences fit in a closed half-plane.
        bool one_side = false;
        for (int p = 0; p < 3 && !one_side; ++p) {
            int pos = 0, neg = 0;
            for (int q = 0; q < 3; ++q) {
                Rational c = cross(nbrs[p].second, nbrs[q].second);
                if (c > 0) ++pos;
                if (c < 0) ++neg;
            }
            if (pos == 0 || neg == 0) one_side = true;
        }
        if (!one_side) fail("neighbor images not on one side of a line");
        // Rotation reversal: the counterclockwise order of the eta's equals
        // the clockwise order of the image differences.
        std::array<int, 3> eta_order{0, 1, 2}, img_order{0, 1, 2};
        std::sort(eta_order.begin(), eta_order.end(),
                  [&](int a, int b) { return angle_less(nbrs[a].first, nbrs[b].first); });
        std::sort(img_order.begin(), img_order.end(), [&](int a, int b) {
            return angle_less(primitive_direction(nbrs[a].second),
                              primitive_direction(nbrs[b].second));
        });
        bool reversed = false;
        for (int r = 0; r < 3 && !reversed; ++r) {
            bool match = true;
            for (int t = 0; t < 3; ++t)
                if (img_order[(r + t) % 3] != eta_order[(3 - t) % 3]) match = false;
            if (match) reversed = true;
        }
        if (!reversed) fail("Psi does not reverse the rotational order at a vertex");
    }

    report.pass = report.violations.empty();
    return report;
}

} // namespace tropaz
