#include "tropaz/gibbs0.hpp"

#include <algorithm>

namespace tropaz {

LiftedVertex lifted_white(const LiftedEdge& e) { return {e.ref.i, e.ref.j, e.m, e.n}; }

LiftedVertex lifted_black(const LiftedEdge& e, const TorusGraph& graph) {
    auto [bi, bj] = graph.black_cell(e.ref);
    auto [dm, dn] = graph.black_copy_shift(e.ref);
    return {bi, bj, e.m + dm, e.n + dn};
}

LaurentMatrix laurent_kasteleyn(const MaximizerGraph& mg, const TorusGraph& graph) {
    if (mg.edges.empty())
        throw ValidationError("EmptyMaximizerGraph", "E_{1,mu} has no edges");
    int nv = graph.n_vertices();
    LaurentMatrix k(nv, std::vector<LaurentPoly>(nv));
    for (const EdgeRef& ref : mg.edges) {
        const TorusEdge& e = graph.edge(ref);
        k[e.white][e.black] = k[e.white][e.black] +
                              LaurentPoly::monomial(Rational(e.sigma), -e.cross_u, e.cross_v);
    }
    return k;
}

std::tuple<LaurentPoly, int, BigInt> char_poly_mu(const LaurentMatrix& k, const Vec2I& mu) {
    LaurentPoly det = laurent_det(k);
    if (!det.is_monomial())
        throw ValidationError("NotMonomial",
                              "det K_{G_{1,mu}} is not a monomial: " + det.str() +
                                  " (E* not strictly concave at mu?)");
    auto [exp, coeff] = *det.terms().begin();
    if (exp.first != mu.x || exp.second != mu.y)
        throw ValidationError("NotMonomial", "monomial exponents do not equal mu: " + det.str());
    if (denominator(coeff) != 1)
        throw InternalError("NotMonomial", "non-integer partition function");
    int tau = coeff > 0 ? 1 : -1;
    BigInt z = numerator(coeff);
    if (z < 0) z = -z;
    return {det, tau, z};
}

GibbsZeroMeasure gibbs_zero_measure(const SurfaceTensionTable& table, const TorusGraph& graph,
                                    const Vec2I& mu) {
    GibbsZeroMeasure measure;
    measure.mu = mu;
    measure.mg = maximizer_graph(table, graph, mu);
    LaurentMatrix k = laurent_kasteleyn(measure.mg, graph);
    std::tie(measure.char_poly, measure.tau, measure.z1mu) = char_poly_mu(k, mu);

    // Adjugate via minors: adj(K)[b][w] = (-1)^{w+b} det(K with row w, col b removed).
    int nv = graph.n_vertices();
    measure.adjugate.assign(nv, std::vector<LaurentPoly>(nv));
    for (int b = 0; b < nv; ++b)
        for (int w = 0; w < nv; ++w) {
            LaurentMatrix minor;
            minor.reserve(nv - 1);
            for (int r = 0; r < nv; ++r) {
                if (r == w) continue;
                std::vector<LaurentPoly> row;
                row.reserve(nv - 1);
                for (int c = 0; c < nv; ++c)
                    if (c != b) row.push_back(k[r][c]);
                minor.push_back(std::move(row));
            }
            LaurentPoly m = laurent_det(minor);
            measure.adjugate[b][w] = ((w + b) % 2 == 0) ? m : m * Rational(-1);
        }
    return measure;
}

namespace {

Rational rational_det(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t piv = p;
        while (piv < n && m[piv][p] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != p) {
            std::swap(m[piv], m[p]);
            det = -det;
        }
        det *= m[p][p];
        for (std::size_t r = p + 1; r < n; ++r) {
            Rational f = m[r][p] / m[p][p];
            for (std::size_t c = p; c < n; ++c) m[r][c] -= f * m[p][c];
        }
    }
    return det;
}

} // namespace

Rational inverse_coefficient(const GibbsZeroMeasure& measure, const TorusGraph& graph,
                             const LiftedVertex& black, const LiftedVertex& white) {
    int b = graph.vertex_index(black.i, black.j);
    int w = graph.vertex_index(white.i, white.j);
    const LaurentPoly& adj = measure.adjugate[b][w];
    long ze = (black.n - white.n) + measure.mu.x;
    long we = (white.m - black.m) + measure.mu.y;
    Rational c = adj.coefficient(static_cast<int>(ze), static_cast<int>(we));
    return c / (Rational(measure.tau) * Rational(measure.z1mu));
}

Rational edge_probabilities(const GibbsZeroMeasure& measure, const TorusGraph& graph,
                            const std::vector<LiftedEdge>& edges) {
    std::size_t p = edges.size();
    for (const LiftedEdge& e : edges)
        if (!measure.mg.contains(e.ref))
            throw ValidationError("EdgeNotInMaximizerGraph",
                                  "edge " + edge_ref_string(e.ref) + " is not in E_mu");
    std::vector<std::vector<Rational>> m(p, std::vector<Rational>(p));
    for (std::size_t s = 0; s < p; ++s) {
        LiftedVertex bs = lifted_black(edges[s], graph);
        for (std::size_t t = 0; t < p; ++t) {
            int sigma = graph.edge(edges[t].ref).sigma;
            LiftedVertex wt = lifted_white(edges[t]);
            m[s][t] = Rational(sigma) * inverse_coefficient(measure, graph, bs, wt);
        }
    }
    return rational_det(std::move(m));
}

std::map<LiftedEdge, Rational> oracle_component_measure(const LiftComponent& component,
                                                        const TorusGraph& graph) {
    if (!component.bounded)
        throw ValidationError("UnboundedComponent", "oracle needs a finite component");
    // Collect whites of the component and, per white, its incident lifted edges.
    std::vector<LiftComponent::Vtx> whites;
    for (const auto& v : component.vertices)
        if (v.white) whites.push_back(v);
    auto white_key = [](const LiftedVertex& v) {
        return std::tuple<int, int, long, long>(v.i, v.j, v.m, v.n);
    };
    std::map<std::tuple<int, int, long, long>, int> white_index;
    for (int i = 0; i < static_cast<int>(whites.size()); ++i)
        white_index[{whites[i].i, whites[i].j, whites[i].m, whites[i].n}] = i;
    std::map<std::tuple<int, int, long, long>, int> black_index;
    int nb = 0;
    for (const auto& v : component.vertices)
        if (!v.white) black_index[{v.i, v.j, v.m, v.n}] = nb++;

    std::vector<std::vector<std::pair<int, LiftedEdge>>> adj(whites.size());
    for (const LiftedEdge& e : component.edges) {
        LiftedVertex wv = lifted_white(e);
        LiftedVertex bv = lifted_black(e, graph);
        adj[white_index.at(white_key(wv))].push_back(
            {black_index.at({bv.i, bv.j, bv.m, bv.n}), e});
    }

    long total = 0;
    std::map<LiftedEdge, long> hits;
    for (const LiftedEdge& e : component.edges) hits[e] = 0;
    std::vector<char> used(nb, 0);
    std::vector<LiftedEdge> chosen;
    auto rec = [&](auto&& self, std::size_t w) -> void {
        if (w == whites.size()) {
            ++total;
            for (const LiftedEdge& e : chosen) ++hits[e];
            return;
        }
        for (auto& [b, e] : adj[w]) {
            if (used[b]) continue;
            used[b] = 1;
            chosen.push_back(e);
            self(self, w + 1);
            chosen.pop_back();
            used[b] = 0;
        }
    };
    rec(rec, 0);
    if (total == 0)
        throw InternalError("NoMatching", "finite component without a perfect matching");
    std::map<LiftedEdge, Rational> marginals;
    for (auto& [e, h] : hits) marginals[e] = Rational(h) / total;
    return marginals;
}

} // namespace tropaz
