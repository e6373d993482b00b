#include "tropaz/kirchhoff.hpp"

#include <algorithm>

#include "tropaz/linsolve.hpp"

namespace tropaz {

Rational OneForm::on(const TropicalCurve& curve, const WalkItem& item, const Vec2I& eta) const {
    if (item.leaf) {
        const CurveLeaf& leaf = curve.leaves[item.index];
        if (eta == leaf.eta_in) return leaf_values[item.index];
        if (eta == -leaf.eta_in) return -leaf_values[item.index];
    } else {
        const CurveEdge& e = curve.edges[item.index];
        if (eta == e.eta) return edge_values[item.index];
        if (eta == -e.eta) return -edge_values[item.index];
    }
    throw InternalError("BadOrientation", "eta does not match the item direction");
}

const Rational& DualActionFunction::at(const Vec2I& mu) const {
    auto it = fstar.find(mu);
    if (it == fstar.end())
        throw ValidationError("UnreachedSlope", "f* not defined at requested mu");
    return it->second;
}

Rational leaf_residue(LeafGroup group, int k, int ell) {
    switch (group) {
        case LeafGroup::L1: return Rational(-ell);
        case LeafGroup::L2: return Rational(k);
        case LeafGroup::L3:
        case LeafGroup::L4: return Rational(0);
    }
    return Rational(0);
}

DualActionFunction solve_dual(const Subdivision& sub, const TropicalCurve& curve) {
    NewtonPolygon np = sub.polygon();
    DualActionFunction out;
    out.gauge_mu0 = {0, np.k};

    // Boundary values follow from the slope conditions, propagated from the
    // gauge corner (0, k): right and top sides constant, bottom increases by
    // k per leftward step, left side decreases by ell per upward step.
    for (const Vec2I& mu : np.lattice_points()) {
        if (np.classify(mu) == PointClass::Interior) continue;
        Rational value;
        if (mu.x == 0)
            value = 0;
        else if (mu.y == np.k)
            value = 0;
        else if (mu.y == 0)
            value = Rational(-mu.x) * np.k;
        else // mu.x == -ell
            value = Rational(np.ell) * (np.k - mu.y);
        out.fstar[mu] = value;
    }

    // Interior unknowns via the weighted discrete Laplacian with weights
    // l*(e*) = l(e) of the dual curve edge.
    std::vector<Rational> subedge_weight(sub.edges.size(), Rational(0));
    for (const CurveEdge& e : curve.edges) subedge_weight[e.dual_edge] = e.length;

    std::vector<Vec2I> interior;
    std::map<Vec2I, int> interior_index;
    for (const Vec2I& mu : np.lattice_points())
        if (np.classify(mu) == PointClass::Interior) {
            interior_index[mu] = static_cast<int>(interior.size());
            interior.push_back(mu);
        }

    if (!interior.empty()) {
        std::size_t n = interior.size();
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> rhs(n, Rational(0));
        for (std::size_t r = 0; r < n; ++r) {
            const Vec2I& mu = interior[r];
            for (int se : sub.edges_at(mu)) {
                const SubEdge& s = sub.edges[se];
                if (s.boundary())
                    throw InternalError("SubdivisionEdge", "boundary edge at interior vertex");
                Vec2I other = (s.u == mu) ? s.v : s.u;
                const Rational& w = subedge_weight[se];
                a[r][r] -= w;
                if (auto it = interior_index.find(other); it != interior_index.end())
                    a[r][it->second] += w;
                else
                    rhs[r] -= w * out.fstar.at(other);
            }
        }
        std::vector<Rational> x = solve_rational_system(std::move(a), std::move(rhs));
        for (std::size_t r = 0; r < n; ++r) out.fstar[interior[r]] = x[r];
    }

    // Per-face gradients from the three triangle corner values.
    out.face_gradients.resize(sub.faces.size());
    for (std::size_t f = 0; f < sub.faces.size(); ++f) {
        const auto& poly = sub.faces[f].poly;
        if (poly.size() != 3)
            throw InternalError("DegenerateFace", "gradient of a non-triangle face");
        const Vec2I &p = poly[0], &q = poly[1], &r = poly[2];
        long det = cross(q - p, r - p);
        Rational sp = out.fstar.at(p), sq = out.fstar.at(q), sr = out.fstar.at(r);
        Rational gx = ((sq - sp) * (r.y - p.y) - (sr - sp) * (q.y - p.y)) / det;
        Rational gy = (Rational(q.x - p.x) * (sr - sp) - Rational(r.x - p.x) * (sq - sp)) / det;
        out.face_gradients[f] = Vec2Q(gx, gy);
    }
    return out;
}

PrimalGradients derive_primal(const DualActionFunction& fstar, const Subdivision& sub,
                              const TropicalCurve& curve) {
    PrimalGradients out;
    out.df.edge_values.resize(curve.edges.size());
    out.df.leaf_values.resize(curve.leaves.size());

    for (std::size_t e = 0; e < curve.edges.size(); ++e) {
        const CurveEdge& ce = curve.edges[e];
        const SubEdge& s = sub.edges[ce.dual_edge];
        Vec2I eta_star = rot_ccw(ce.eta);
        Vec2I d = s.v - s.u;
        Rational df_star;
        if (d == eta_star)
            df_star = fstar.at(s.v) - fstar.at(s.u);
        else if (d == -eta_star)
            df_star = fstar.at(s.u) - fstar.at(s.v);
        else
            throw InternalError("DualityBroken", "dual edge not parallel to rotated eta");
        out.df.edge_values[e] = df_star;
    }
    for (std::size_t l = 0; l < curve.leaves.size(); ++l)
        out.df.leaf_values[l] = leaf_residue(curve.leaves[l].group, curve.k, curve.ell);

    out.vertex_gradients.resize(curve.vertices.size());
    for (int v = 0; v < static_cast<int>(curve.vertices.size()); ++v) {
        auto inc = curve.incident(v);
        if (inc.size() != 3)
            throw InternalError("DegenerateVertex", "curve vertex of degree != 3");
        // Two independent directions determine the gradient; the third is a check.
        int a = 0, b = 1;
        if (cross(inc[a].eta_out, inc[b].eta_out) == 0) b = 2;
        long det = cross(inc[a].eta_out, inc[b].eta_out);
        Rational va = out.df.on(curve, inc[a].item, inc[a].eta_out);
        Rational vb = out.df.on(curve, inc[b].item, inc[b].eta_out);
        Rational gx = (va * inc[b].eta_out.y - vb * inc[a].eta_out.y) / det;
        Rational gy = (Rational(inc[a].eta_out.x) * vb - Rational(inc[b].eta_out.x) * va) / det;
        Vec2Q g(gx, gy);
        for (const auto& item : inc) {
            Rational expect = out.df.on(curve, item.item, item.eta_out);
            if (dot(g, item.eta_out) != expect)
                throw InternalError("InconsistentThirdEdge",
                                    "df_t is not locally linear at a vertex");
        }
        out.vertex_gradients[v] = g;
    }
    return out;
}

ExactnessReport verify_exactness(const OneForm& form, const TropicalCurve& curve) {
    ExactnessReport report;
    for (std::size_t l = 0; l < curve.leaves.size(); ++l)
        report.residue_sum += form.leaf_values[l];

    // Integrate over a spanning forest; every non-tree edge closes an
    // independent cycle whose integral must vanish.
    std::size_t nv = curve.vertices.size();
    std::vector<int> seen(nv, 0);
    std::vector<Rational> potential(nv, Rational(0));
    std::vector<char> in_tree(curve.edges.size(), 0);
    for (std::size_t root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e = 0; e < curve.edges.size(); ++e) {
                const CurveEdge& ce = curve.edges[e];
                if (ce.v_from != static_cast<int>(v) && ce.v_to != static_cast<int>(v)) continue;
                std::size_t u = (ce.v_from == static_cast<int>(v)) ? ce.v_to : ce.v_from;
                if (seen[u]) continue;
                seen[u] = 1;
                in_tree[e] = 1;
                Rational step = ce.length * form.edge_values[e];
                if (ce.v_from == static_cast<int>(v))
                    potential[u] = potential[v] + step;
                else
                    potential[u] = potential[v] - step;
                stack.push_back(u);
            }
        }
    }
    for (std::size_t e = 0; e < curve.edges.size(); ++e) {
        if (in_tree[e]) continue;
        const CurveEdge& ce = curve.edges[e];
        Rational integral =
            potential[ce.v_from] + ce.length * form.edge_values[e] - potential[ce.v_to];
        report.cycle_integrals.push_back(integral);
    }
    report.exact = (report.residue_sum == 0);
    for (const Rational& c : report.cycle_integrals)
        if (c != 0) report.exact = false;
    return report;
}

} // namespace tropaz
