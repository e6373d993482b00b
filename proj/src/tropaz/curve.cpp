#include "tropaz/curve.hpp"

#include <algorithm>

namespace tropaz {

std::vector<TropicalCurve::Incidence> TropicalCurve::incident(int vertex) const {
    std::vector<Incidence> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].v_from == vertex) out.push_back({{false, e}, edges[e].eta});
        if (edges[e].v_to == vertex) out.push_back({{false, e}, -edges[e].eta});
    }
    for (int l = 0; l < static_cast<int>(leaves.size()); ++l)
        if (leaves[l].vertex == vertex) out.push_back({{true, l}, -leaves[l].eta_in});
    return out;
}

TropicalCurve build_curve(const Subdivision& sub, const SurfaceTensionTable& table) {
    GenericityReport generic = classify_genericity(sub);
    if (!generic.smooth)
        throw ValidationError("NotSmooth",
                              "tropical curve requires a unit triangulation of the Newton polygon");
    TropicalCurve curve;
    curve.k = sub.k;
    curve.ell = sub.ell;

    // Dual vertex of a face = negative gradient of the lifted supporting plane.
    curve.vertex_of_face.assign(sub.faces.size(), -1);
    for (int f = 0; f < static_cast<int>(sub.faces.size()); ++f) {
        CurveVertex v;
        v.pos = Vec2Q(-sub.faces[f].a, -sub.faces[f].b);
        v.face = f;
        curve.vertex_of_face[f] = static_cast<int>(curve.vertices.size());
        curve.vertices.push_back(v);
    }

    std::vector<int> dual_of_subedge(sub.edges.size(), -1);
    for (int se = 0; se < static_cast<int>(sub.edges.size()); ++se) {
        const SubEdge& s = sub.edges[se];
        if (s.boundary()) {
            CurveLeaf leaf;
            leaf.vertex = curve.vertex_of_face[s.face0];
            leaf.group = static_cast<LeafGroup>(s.side);
            switch (leaf.group) {
                case LeafGroup::L1: leaf.eta_in = {1, 0}; break;
                case LeafGroup::L2: leaf.eta_in = {0, 1}; break;
                case LeafGroup::L3: leaf.eta_in = {-1, 0}; break;
                case LeafGroup::L4: leaf.eta_in = {0, -1}; break;
            }
            const Vec2Q& pos = curve.vertices[leaf.vertex].pos;
            leaf.line_coord = (leaf.group == LeafGroup::L1 || leaf.group == LeafGroup::L3)
                                  ? pos.y
                                  : pos.x;
            leaf.dual_edge = se;
            dual_of_subedge[se] = static_cast<int>(curve.leaves.size());
            curve.leaves.push_back(leaf);
        } else {
            int v0 = curve.vertex_of_face[s.face0];
            int v1 = curve.vertex_of_face[s.face1];
            if (v1 < v0) std::swap(v0, v1);
            Vec2Q d = curve.vertices[v1].pos - curve.vertices[v0].pos;
            if (d.x == 0 && d.y == 0)
                throw InternalError("ZeroLengthEdge", "adjacent faces share a dual vertex");
            CurveEdge e;
            e.v_from = v0;
            e.v_to = v1;
            e.eta = primitive_direction(d);
            e.length = (e.eta.x != 0) ? d.x / e.eta.x : d.y / e.eta.y;
            e.dual_edge = se;
            if (dot(d, s.v - s.u) != 0)
                throw InternalError("DualityBroken", "curve edge not orthogonal to its dual");
            dual_of_subedge[se] = static_cast<int>(curve.edges.size());
            curve.edges.push_back(e);
        }
    }

    // Component boundary walks, counterclockwise around each mu.
    NewtonPolygon np = sub.polygon();
    for (const Vec2I& mu : np.lattice_points()) {
        std::vector<int> inc = sub.edges_at(mu);
        std::vector<std::pair<Vec2I, int>> dirs; // (direction away from mu, sub-edge id)
        for (int se : inc) {
            const SubEdge& s = sub.edges[se];
            Vec2I d = (s.u == mu) ? s.v - mu : s.u - mu;
            dirs.push_back({d, se});
        }
        std::sort(dirs.begin(), dirs.end(),
                  [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
        ComponentBoundary cb;
        cb.mu = mu;
        cb.closed = (np.classify(mu) == PointClass::Interior);
        std::size_t start = 0;
        if (!cb.closed) {
            Vec2I out{mu.x == 0 ? 1 : (mu.x == -np.ell ? -1 : 0),
                      mu.y == 0 ? -1 : (mu.y == np.k ? 1 : 0)};
            start = dirs.size();
            for (std::size_t p = 0; p < dirs.size(); ++p)
                if (angle_less(out, dirs[p].first)) {
                    start = p;
                    break;
                }
            start %= dirs.size();
        }
        for (std::size_t p = 0; p < dirs.size(); ++p) {
            int se = dirs[(start + p) % dirs.size()].second;
            cb.items.push_back({sub.edges[se].boundary(), dual_of_subedge[se]});
        }
        std::size_t n_between = cb.closed ? dirs.size() : dirs.size() - 1;
        for (std::size_t p = 0; p < n_between; ++p) {
            int se_a = dirs[(start + p) % dirs.size()].second;
            int se_b = dirs[(start + p + 1) % dirs.size()].second;
            int face = sub.face_containing_edge_pair(mu, se_a, se_b);
            cb.vertices.push_back(curve.vertex_of_face[face]);
        }
        curve.components.emplace(mu, std::move(cb));
    }
    return curve;
}

const ComponentBoundary& component_boundary(const TropicalCurve& curve, const Vec2I& mu) {
    auto it = curve.components.find(mu);
    if (it == curve.components.end())
        throw ValidationError("UnreachedSlope", "mu outside the Newton polygon");
    return it->second;
}

LeafLines leaf_lines_from_weights(const FundamentalDomain& domain) {
    LeafLines lines;
    for (int i = 0; i < domain.ell; ++i) {
        Rational l2 = 0, l4 = 0;
        for (int j = 0; j < domain.k; ++j) {
            l2 += domain.log_weight({i, j, EdgeType::South}) -
                  domain.log_weight({i, j, EdgeType::West});
            l4 += domain.log_weight({i, j, EdgeType::East});
        }
        lines.l2_x.push_back(l2);
        lines.l4_x.push_back(l4);
    }
    for (int j = 0; j < domain.k; ++j) {
        Rational l1 = 0, l3 = 0;
        for (int i = 0; i < domain.ell; ++i) {
            l1 += domain.log_weight({i, j, EdgeType::South}) -
                  domain.log_weight({i, j, EdgeType::East});
            l3 += domain.log_weight({i, j, EdgeType::West});
        }
        lines.l1_y.push_back(l1);
        lines.l3_y.push_back(l3);
    }
    auto sort_all = [](std::vector<Rational>& v) { std::sort(v.begin(), v.end()); };
    sort_all(lines.l1_y);
    sort_all(lines.l2_x);
    sort_all(lines.l3_y);
    sort_all(lines.l4_x);
    return lines;
}

LeafLines leaf_lines_of_curve(const TropicalCurve& curve) {
    LeafLines lines;
    for (const CurveLeaf& leaf : curve.leaves) {
        switch (leaf.group) {
            case LeafGroup::L1: lines.l1_y.push_back(leaf.line_coord); break;
            case LeafGroup::L2: lines.l2_x.push_back(leaf.line_coord); break;
            case LeafGroup::L3: lines.l3_y.push_back(leaf.line_coord); break;
            case LeafGroup::L4: lines.l4_x.push_back(leaf.line_coord); break;
        }
    }
    auto sort_all = [](std::vector<Rational>& v) { std::sort(v.begin(), v.end()); };
    sort_all(lines.l1_y);
    sort_all(lines.l2_x);
    sort_all(lines.l3_y);
    sort_all(lines.l4_x);
    return lines;
}

} // namespace tropaz
