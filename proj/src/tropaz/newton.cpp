#include "tropaz/newton.hpp"

#include <algorithm>
#include <map>

namespace tropaz {

std::vector<Vec2I> NewtonPolygon::lattice_points() const {
    std::vector<Vec2I> pts;
    for (long x = -ell; x <= 0; ++x)
        for (long y = 0; y <= k; ++y) pts.push_back({x, y});
    return pts;
}

bool NewtonPolygon::contains(const Vec2I& mu) const {
    return mu.x >= -ell && mu.x <= 0 && mu.y >= 0 && mu.y <= k;
}

PointClass NewtonPolygon::classify(const Vec2I& mu) const {
    bool bx = (mu.x == -ell || mu.x == 0);
    bool by = (mu.y == 0 || mu.y == k);
    if (bx && by) return PointClass::Corner;
    if (bx || by) return PointClass::Boundary;
    return PointClass::Interior;
}

Rational SubFace::area2() const {
    Rational s = 0;
    for (std::size_t p = 0; p < poly.size(); ++p) {
        const Vec2I& u = poly[p];
        const Vec2I& v = poly[(p + 1) % poly.size()];
        s += Rational(u.x) * v.y - Rational(u.y) * v.x;
    }
    return s < 0 ? -s : s;
}

namespace {

// Strict 2D convex hull of integer points, counterclockwise; collinear
// non-extreme points are excluded.
std::vector<Vec2I> convex_hull(std::vector<Vec2I> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vec2I> hull(2 * n);
    std::size_t h = 0;
    for (std::size_t p = 0; p < n; ++p) {
        while (h >= 2 && cross(hull[h - 1] - hull[h - 2], pts[p] - hull[h - 2]) <= 0) --h;
        hull[h++] = pts[p];
    }
    std::size_t lower = h + 1;
    for (std::size_t p = n - 1; p-- > 0;) {
        while (h >= lower && cross(hull[h - 1] - hull[h - 2], pts[p] - hull[h - 2]) <= 0) --h;
        hull[h++] = pts[p];
    }
    hull.resize(h - 1);
    return hull;
}

bool on_segment(const Vec2I& p, const Vec2I& a, const Vec2I& b) {
    if (cross(b - a, p - a) != 0) return false;
    return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

} // namespace

bool Subdivision::is_vertex(const Vec2I& mu) const {
    bool seen_as_vertex = false;
    for (const SubFace& f : faces) {
        for (const Vec2I& p : f.on_edge)
            if (p == mu) return false;
        for (const Vec2I& p : f.interior)
            if (p == mu) return false;
        for (const Vec2I& p : f.poly)
            if (p == mu) seen_as_vertex = true;
    }
    return seen_as_vertex;
}

std::vector<int> Subdivision::edges_at(const Vec2I& mu) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].u == mu || edges[e].v == mu) out.push_back(e);
    return out;
}

int Subdivision::face_containing_edge_pair(const Vec2I& mu, int edge_a, int edge_b) const {
    (void)mu;
    const SubEdge& a = edges[edge_a];
    const SubEdge& b = edges[edge_b];
    for (int fa : {a.face0, a.face1}) {
        if (fa < 0) continue;
        if (fa == b.face0 || fa == b.face1) return fa;
    }
    throw InternalError("SubdivisionAdjacency", "edges do not share a face");
}

Subdivision build_subdivision(const SurfaceTensionTable& table) {
    Subdivision sub;
    sub.k = table.k;
    sub.ell = table.ell;
    NewtonPolygon np{table.k, table.ell};
    std::vector<Vec2I> pts = np.lattice_points();
    for (const Vec2I& p : pts) sub.lift[p] = table.at(p).estar;

    // Enumerate supporting planes through non-collinear triples of lifted
    // points; each upper face of the lift appears as an equality set.
    std::map<std::vector<Vec2I>, std::array<Rational, 3>> face_sets;
    std::size_t n = pts.size();
    for (std::size_t ip = 0; ip < n; ++ip)
        for (std::size_t iq = ip + 1; iq < n; ++iq)
            for (std::size_t ir = iq + 1; ir < n; ++ir) {
                const Vec2I &p = pts[ip], &q = pts[iq], &r = pts[ir];
                long det = cross(q - p, r - p);
                if (det == 0) continue;
                const Rational &sp = sub.lift[p], &sq = sub.lift[q], &sr = sub.lift[r];
                Rational a = ((sq - sp) * (r.y - p.y) - (sr - sp) * (q.y - p.y)) / det;
                Rational b = (Rational(q.x - p.x) * (sr - sp) - Rational(r.x - p.x) * (sq - sp)) / det;
                Rational c = sp - a * p.x - b * p.y;
                bool upper = true;
                std::vector<Vec2I> eq;
                for (const Vec2I& m : pts) {
                    Rational plane = a * m.x + b * m.y + c;
                    const Rational& s = sub.lift[m];
                    if (s > plane) {
                        upper = false;
                        break;
                    }
                    if (s == plane) eq.push_back(m);
                }
                if (!upper) continue;
                face_sets.emplace(std::move(eq), std::array<Rational, 3>{a, b, c});
            }

    for (auto& [eq, plane] : face_sets) {
        SubFace face;
        face.a = plane[0];
        face.b = plane[1];
        face.c = plane[2];
        face.poly = convex_hull(eq);
        if (face.poly.size() < 3)
            throw InternalError("DegenerateFace", "upper face with collinear equality set");
        for (const Vec2I& m : eq) {
            if (std::find(face.poly.begin(), face.poly.end(), m) != face.poly.end()) continue;
            bool edge_pt = false;
            for (std::size_t p = 0; p < face.poly.size(); ++p)
                if (on_segment(m, face.poly[p], face.poly[(p + 1) % face.poly.size()])) {
                    edge_pt = true;
                    break;
                }
            (edge_pt ? face.on_edge : face.interior).push_back(m);
        }
        sub.faces.push_back(std::move(face));
    }

    // Collect edges from face polygons; interior edges are shared by two
    // faces, boundary edges carry the side tag of the rectangle.
    std::map<std::pair<Vec2I, Vec2I>, SubEdge> edge_map;
    for (int f = 0; f < static_cast<int>(sub.faces.size()); ++f) {
        const auto& poly = sub.faces[f].poly;
        for (std::size_t p = 0; p < poly.size(); ++p) {
            Vec2I u = poly[p], v = poly[(p + 1) % poly.size()];
            if (v < u) std::swap(u, v);
            auto key = std::make_pair(u, v);
            auto it = edge_map.find(key);
            if (it == edge_map.end()) {
                SubEdge e;
                e.u = u;
                e.v = v;
                e.face0 = f;
                edge_map.emplace(key, e);
            } else {
                if (it->second.face1 != -1)
                    throw InternalError("SubdivisionEdge", "edge shared by three faces");
                it->second.face1 = f;
            }
        }
    }
    for (auto& [key, e] : edge_map) {
        if (e.face1 == -1) {
            if (e.u.x == -np.ell && e.v.x == -np.ell)
                e.side = static_cast<int>(Side::Left);
            else if (e.u.y == 0 && e.v.y == 0)
                e.side = static_cast<int>(Side::Bottom);
            else if (e.u.x == 0 && e.v.x == 0)
                e.side = static_cast<int>(Side::Right);
            else if (e.u.y == np.k && e.v.y == np.k)
                e.side = static_cast<int>(Side::Top);
            else
                throw InternalError("SubdivisionEdge", "single-face edge off the boundary");
        }
        sub.edges.push_back(e);
    }
    return sub;
}

GenericityReport classify_genericity(const Subdivision& sub) {
    GenericityReport report;
    std::vector<Vec2I> non_vertex;
    for (const SubFace& f : sub.faces) {
        for (const Vec2I& p : f.on_edge) non_vertex.push_back(p);
        for (const Vec2I& p : f.interior) non_vertex.push_back(p);
        if (f.poly.size() > 3) {
            report.reasons.push_back({"NonTriangleFace", f.poly});
        } else if (f.area2() > 1) {
            report.reasons.push_back({"OversizedTriangle", f.poly});
        }
    }
    std::sort(non_vertex.begin(), non_vertex.end());
    non_vertex.erase(std::unique(non_vertex.begin(), non_vertex.end()), non_vertex.end());
    for (const Vec2I& p : non_vertex) report.reasons.push_back({"NonVertexLatticePoint", {p}});
    report.smooth = report.reasons.empty();
    return report;
}

std::pair<Rational, std::vector<Vec2I>> eval_tropical_poly(const SurfaceTensionTable& table,
                                                           const Rational& x, const Rational& y) {
    Rational best;
    std::vector<Vec2I> argmax;
    bool first = true;
    for (const auto& [mu, entry] : table.entries) {
        Rational v = x * mu.x + y * mu.y + entry.estar;
        if (first || v > best) {
            best = v;
            argmax = {mu};
            first = false;
        } else if (v == best) {
            argmax.push_back(mu);
        }
    }
    return {best, argmax};
}

} // namespace tropaz
