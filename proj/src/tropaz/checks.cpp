#include "tropaz/checks.hpp"

#include <random>
#include <sstream>

#include "tropaz/gibbs0.hpp"

namespace tropaz {

namespace {

std::string mu_str(const Vec2I& mu) {
    std::ostringstream os;
    os << "(" << mu.x << "," << mu.y << ")";
    return os.str();
}

} // namespace

std::vector<CheckResult> run_invariant_checks(const Pipeline& pipeline, int random_points,
                                              std::uint64_t seed) {
    std::vector<CheckResult> results;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    };
    const SurfaceTensionTable& table = pipeline.table;
    const Subdivision& sub = pipeline.sub;
    int k = table.k, ell = table.ell;

    // Concavity: every lifted point lies on the upper hull.
    {
        bool ok = true;
        std::string detail;
        for (const auto& [mu, entry] : table.entries) {
            bool on_hull = false;
            for (const SubFace& f : sub.faces)
                if (f.a * mu.x + f.b * mu.y + f.c == entry.estar) on_hull = true;
            if (!on_hull) {
                ok = false;
                detail = "lifted point below hull at " + mu_str(mu);
            }
        }
        add("surface-tension-concavity", ok, detail);
    }
    // Face areas tile the rectangle.
    {
        Rational total = 0;
        for (const SubFace& f : sub.faces) total += f.area2();
        add("subdivision-area", total == Rational(2) * k * ell);
    }
    // Strict concavity at mu iff mu is a subdivision vertex, via maximizer count.
    {
        bool ok = true;
        std::string detail;
        for (const auto& [mu, entry] : table.entries)
            if (entry.maximizers.size() == 1 && !sub.is_vertex(mu)) {
                ok = false;
                detail = "unique maximizer but not a vertex at " + mu_str(mu);
            }
        add("unique-maximizer-vertex", ok, detail);
    }

    if (!pipeline.smooth()) {
        add("smooth", false, "subdivision is not a unit triangulation; curve checks skipped");
        return results;
    }
    add("smooth", true);
    const TropicalCurve& curve = *pipeline.curve;
    ActionContext ctx = pipeline.action();

    // Curve structure: 2kl degree-3 vertices, balanced, dual-consistent.
    add("vertex-count", static_cast<int>(curve.vertices.size()) == 2 * k * ell);
    {
        bool ok = true;
        for (int v = 0; v < static_cast<int>(curve.vertices.size()); ++v) {
            auto inc = curve.incident(v);
            if (inc.size() != 3) ok = false;
            Vec2I sum{0, 0};
            for (const auto& item : inc) sum = sum + item.eta_out;
            if (sum != Vec2I{0, 0}) ok = false;
        }
        add("vertex-balancing", ok);
    }
    {
        bool ok = true;
        for (const CurveEdge& e : curve.edges) {
            Vec2Q d = curve.vertices[e.v_to].pos - curve.vertices[e.v_from].pos;
            if (d.x != e.length * e.eta.x || d.y != e.length * e.eta.y) ok = false;
            if (e.length <= 0) ok = false;
        }
        add("edge-length-direction", ok);
    }
    {
        std::size_t l1 = 0, l2 = 0, l3 = 0, l4 = 0;
        for (const CurveLeaf& l : curve.leaves) switch (l.group) {
                case LeafGroup::L1: ++l1; break;
                case LeafGroup::L2: ++l2; break;
                case LeafGroup::L3: ++l3; break;
                case LeafGroup::L4: ++l4; break;
            }
        add("leaf-counts", l1 == static_cast<std::size_t>(k) && l3 == static_cast<std::size_t>(k) &&
                               l2 == static_cast<std::size_t>(ell) &&
                               l4 == static_cast<std::size_t>(ell));
    }
    {
        LeafLines from_weights = leaf_lines_from_weights(pipeline.domain);
        LeafLines from_curve = leaf_lines_of_curve(curve);
        bool ok = from_weights.l1_y == from_curve.l1_y && from_weights.l2_x == from_curve.l2_x &&
                  from_weights.l3_y == from_curve.l3_y && from_weights.l4_x == from_curve.l4_x;
        add("leaf-lines-closed-form", ok);
    }

    // Kirchhoff: Laplacian residual and boundary slopes, exactness of df_t.
    {
        bool ok = true;
        NewtonPolygon np = sub.polygon();
        std::vector<Rational> weight(sub.edges.size(), Rational(0));
        for (const CurveEdge& e : curve.edges) weight[e.dual_edge] = e.length;
        for (const Vec2I& mu : np.lattice_points()) {
            if (np.classify(mu) != PointClass::Interior) continue;
            Rational acc = 0;
            for (int se : sub.edges_at(mu)) {
                Vec2I other = (sub.edges[se].u == mu) ? sub.edges[se].v : sub.edges[se].u;
                acc += weight[se] * (pipeline.fstar->at(other) - pipeline.fstar->at(mu));
            }
            if (acc != 0) ok = false;
        }
        add("laplacian-residual", ok);
    }
    {
        ExactnessReport report = verify_exactness(pipeline.primal->df, curve);
        add("df-exactness", report.exact);
    }

    ArcticCurveGeometry geom = arctic_curve(ctx);
    {
        bool ok = true;
        for (const Vec2Q& p : geom.psi)
            if (!ctx.in_domain_closed(p)) ok = false;
        // Leaf-attached vertices land on the matching boundary side.
        for (const CurveLeaf& l : curve.leaves) {
            const Vec2Q& p = geom.psi[l.vertex];
            switch (l.group) {
                case LeafGroup::L1: ok = ok && p.y == 0; break;                        // top
                case LeafGroup::L2: ok = ok && p.x == 0; break;                        // right
                case LeafGroup::L3: ok = ok && p.y == Rational(-1) / k; break;         // bottom
                case LeafGroup::L4: ok = ok && p.x == Rational(-1) / ell; break;       // left
            }
        }
        add("psi-placement", ok);
    }
    {
        bool ok = true;
        for (const ArcticSegment& s : geom.segments) {
            if (s.degenerate) continue;
            Vec2Q d = s.p1 - s.p0;
            const Vec2I& eta = curve.edges[s.edge].eta;
            if (d.x * eta.y != d.y * eta.x) ok = false;
        }
        add("segments-parallel-eta", ok);
    }

    // Zero counting at random rational points.
    {
        std::mt19937_64 rng(seed);
        const long denom = 9973;
        auto draw_inside = [&]() {
            long a = 1 + static_cast<long>(rng() % (denom - 1));
            long b = 1 + static_cast<long>(rng() % (denom - 1));
            return Vec2Q(Rational(-a) / (denom * ell), Rational(-b) / (denom * k));
        };
        bool ok_inside = true, ok_outside = true;
        int done = 0, guard = 0;
        while (done < random_points && guard < 20 * random_points) {
            ++guard;
            Vec2Q uv = draw_inside();
            ActionSlopes slopes = action_slopes(ctx, uv.x, uv.y);
            ZeroReport report = classify_zeros(ctx, slopes);
            if (report.has_triple) continue;
            long total = 2 * report.double_e_count;
            for (const auto& [mu, count] : report.z) total += count;
            if (total != 2 * k * ell) ok_inside = false;
            ++done;
        }
        add("zero-counting-inside", ok_inside && done == random_points);
        done = 0;
        guard = 0;
        while (done < random_points / 4 + 1 && guard < 20 * random_points) {
            ++guard;
            long a = 1 + static_cast<long>(rng() % (denom - 1));
            long b = 1 + static_cast<long>(rng() % (denom - 1));
            // Strictly outside the closed rectangle, away from the residue lines.
            Vec2Q uv(Rational(a) / denom + 1, Rational(-b) / (denom * k));
            ActionSlopes slopes = action_slopes(ctx, uv.x, uv.y);
            ZeroReport report = classify_zeros(ctx, slopes);
            if (report.has_triple) continue;
            long total = 0;
            for (const auto& [mu, count] : report.z) total += count;
            if (report.has_double_e || total != 2 * k * ell) ok_outside = false;
            ++done;
        }
        add("zero-counting-outside", ok_outside && done > 0);
    }

    // Limit shape: facet formula vs path sum at random points, continuity
    // across every nondegenerate segment.
    {
        std::mt19937_64 rng(seed + 1);
        const long denom = 9973;
        bool ok = true;
        for (int t = 0; t < random_points / 2; ++t) {
            long a = 1 + static_cast<long>(rng() % (denom - 1));
            long b = 1 + static_cast<long>(rng() % (denom - 1));
            Rational u = Rational(-a) / (denom * ell), v = Rational(-b) / (denom * k);
            Phase phase = classify_point(ctx, u, v);
            if (phase.kind == Phase::Kind::ArcticCurve) continue;
            Rational facet = limit_shape_facet(ctx, *phase.mu, u, v);
            Rational gamma = limit_shape_gamma(ctx, *phase.mu, u, v);
            if (facet != gamma) ok = false;
        }
        add("facet-vs-path-sum", ok);
        bool cont = true;
        for (const ArcticSegment& s : geom.segments) {
            if (s.degenerate) continue;
            Vec2Q mid((s.p0.x + s.p1.x) / 2, (s.p0.y + s.p1.y) / 2);
            if (!ctx.in_domain_open(mid)) continue;
            const SubEdge& se = sub.edges[curve.edges[s.edge].dual_edge];
            Rational h0 = limit_shape_facet(ctx, se.u, mid.x, mid.y);
            Rational h1 = limit_shape_facet(ctx, se.v, mid.x, mid.y);
            if (h0 != h1) cont = false;
            if (limit_shape(ctx, mid.x, mid.y) != h0) cont = false;
        }
        add("limit-shape-continuity", cont);
    }

    {
        GeometryReport report = verify_geometry(ctx, geom);
        add("angle-geometry", report.pass,
            report.pass ? "" : report.violations.front());
    }

    // Zero-temperature Gibbs: monomial determinants, vertex sums, oracle match.
    {
        bool ok_monomial = true, ok_sums = true, ok_oracle = true;
        std::string detail;
        for (const auto& [mu, entry] : table.entries) {
            if (!sub.is_vertex(mu)) continue;
            GibbsZeroMeasure measure;
            try {
                measure = gibbs_zero_measure(table, pipeline.graph, mu);
            } catch (const Error& e) {
                ok_monomial = false;
                detail = std::string(e.what()) + " at " + mu_str(mu);
                continue;
            }
            // Vertex normalization on the fundamental cell whites.
            for (int i = 0; i < ell && ok_sums; ++i)
                for (int j = 0; j < k && ok_sums; ++j) {
                    Rational total = 0;
                    for (EdgeType t : kEdgeTypes) {
                        EdgeRef ref{i, j, t};
                        if (!measure.mg.contains(ref)) continue;
                        total += edge_probabilities(measure, pipeline.graph,
                                                    {LiftedEdge{ref, 0, 0}});
                    }
                    if (total != 1) ok_sums = false;
                }
            for (const LiftComponent& component : measure.mg.components) {
                if (!component.bounded) continue;
                auto oracle = oracle_component_measure(component, pipeline.graph);
                for (const auto& [edge, marginal] : oracle)
                    if (edge_probabilities(measure, pipeline.graph, {edge}) != marginal)
                        ok_oracle = false;
            }
        }
        add("gibbs-monomial", ok_monomial, detail);
        add("gibbs-vertex-sums", ok_sums);
        add("gibbs-oracle-equivalence", ok_oracle);
    }

    return results;
}

} // namespace tropaz
