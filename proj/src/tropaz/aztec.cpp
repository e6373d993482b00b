#include "tropaz/aztec.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace tropaz {

namespace {

// Black endpoint b_{x', y'} of the edge of the given type at white w_{x,y}.
std::pair<int, int> black_of(int x, int y, EdgeType t) {
    switch (t) {
        case EdgeType::West: return {x, y};
        case EdgeType::South: return {x, y + 1};
        case EdgeType::East: return {x + 1, y + 1};
        case EdgeType::North: return {x + 1, y};
    }
    return {x, y};
}

} // namespace

AztecGraph build_aztec(const FundamentalDomain& domain, int N) {
    if (N < 1) throw ValidationError("NonPositivePeriod", "Aztec size parameter N must be >= 1");
    AztecGraph g;
    g.k = domain.k;
    g.ell = domain.ell;
    g.N = N;
    g.n = domain.k * domain.ell * N;
    for (int x = 0; x < g.n; ++x)
        for (int y = -1; y < g.n; ++y)
            for (EdgeType t : kEdgeTypes) {
                auto [bx, by] = black_of(x, y, t);
                if (!g.valid_black(bx, by)) continue;
                AztecEdge e;
                e.x = x;
                e.y = y;
                e.type = t;
                e.white = g.white_index(x, y);
                e.black = g.black_index(bx, by);
                e.logw = domain.log_weight_at(x, y, t);
                e.sigma = (t == EdgeType::North) ? -1 : 1;
                g.edge_of_pair[{e.white, e.black}] = static_cast<int>(g.edges.size());
                g.edges.push_back(e);
            }
    return g;
}

std::vector<std::vector<int>> enumerate_aztec_covers(const AztecGraph& graph, int guard_n) {
    if (graph.n > guard_n)
        throw GuardError("SizeGuardExceeded", "Aztec enumeration limited to n <= " +
                                                  std::to_string(guard_n));
    int nw = graph.n_white();
    std::vector<std::vector<int>> incident(nw);
    for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e)
        incident[graph.edges[e].white].push_back(e);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen(nw, -1);
    std::vector<char> black_used(nw, 0);
    auto rec = [&](auto&& self, int w) -> void {
        if (w == nw) {
            out.push_back(chosen);
            return;
        }
        for (int e : incident[w]) {
            int b = graph.edges[e].black;
            if (black_used[b]) continue;
            black_used[b] = 1;
            chosen[w] = e;
            self(self, w + 1);
            black_used[b] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

struct DenseLU {
    int n = 0;
    std::vector<std::vector<Real>> lu;
    std::vector<int> piv;

    // Factorize A (row-major) with partial pivoting.
    void factor(std::vector<std::vector<Real>> a) {
        n = static_cast<int>(a.size());
        lu = std::move(a);
        piv.assign(n, 0);
        for (int col = 0; col < n; ++col) {
            int best = col;
            Real best_abs = abs(lu[col][col]);
            for (int r = col + 1; r < n; ++r) {
                Real v = abs(lu[r][col]);
                if (v > best_abs) {
                    best = r;
                    best_abs = v;
                }
            }
            if (best_abs == 0)
                throw ValidationError("SingularKasteleyn", "Aztec Kasteleyn matrix is singular");
            std::swap(lu[best], lu[col]);
            piv[col] = best;
            for (int r = col + 1; r < n; ++r) {
                Real f = lu[r][col] / lu[col][col];
                lu[r][col] = f;
                for (int c = col + 1; c < n; ++c) lu[r][c] -= f * lu[col][c];
            }
        }
    }

    std::vector<Real> solve(std::vector<Real> b) const {
        for (int col = 0; col < n; ++col) std::swap(b[col], b[piv[col]]);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < r; ++c) b[r] -= lu[r][c] * b[c];
        for (int r = n - 1; r >= 0; --r) {
            for (int c = r + 1; c < n; ++c) b[r] -= lu[r][c] * b[c];
            b[r] /= lu[r][r];
        }
        return b;
    }
};

Real beta_weight_guard(const AztecGraph& graph, const Rational& beta) {
    Rational max_abs = 0;
    for (const AztecEdge& e : graph.edges) {
        Rational a = e.logw < 0 ? -e.logw : e.logw;
        if (a > max_abs) max_abs = a;
    }
    Rational scale = beta * max_abs;
    if (scale > 10000)
        throw GuardError("SizeGuardExceeded", "beta * max|log nu| exceeds 1e4");
    return to_real(beta);
}

} // namespace

std::vector<Real> aztec_edge_marginals(const AztecGraph& graph, const Rational& beta,
                                       int guard_n) {
    if (graph.n > guard_n)
        throw GuardError("SizeGuardExceeded",
                         "dense solve limited to n <= " + std::to_string(guard_n));
    Real beta_r = beta_weight_guard(graph, beta);
    int nv = graph.n_white();
    std::vector<std::vector<Real>> kmat(nv, std::vector<Real>(nv, Real(0)));
    for (const AztecEdge& e : graph.edges)
        kmat[e.white][e.black] = exp(beta_r * to_real(e.logw)) * e.sigma;
    DenseLU lu;
    lu.factor(std::move(kmat));

    // One solve per white vertex yields the column K^{-1}(., w).
    std::vector<Real> marginals(graph.edges.size(), Real(0));
    std::vector<std::vector<int>> edges_of_white(nv);
    for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e)
        edges_of_white[graph.edges[e].white].push_back(e);
    for (int w = 0; w < nv; ++w) {
        std::vector<Real> rhs(nv, Real(0));
        rhs[w] = 1;
        std::vector<Real> col = lu.solve(std::move(rhs));
        for (int e : edges_of_white[w]) {
            const AztecEdge& edge = graph.edges[e];
            Real kwb = exp(beta_r * to_real(edge.logw)) * edge.sigma;
            marginals[e] = kwb * col[edge.black];
        }
    }
    return marginals;
}

namespace {

struct FaceLattice {
    const AztecGraph& graph;

    bool valid(const Face& f) const {
        auto [x, y] = f;
        if (((x ^ y) & 1) != 0) return false;
        if ((x & 1) == 0)
            return x >= 0 && x <= 2 * graph.n && y >= 0 && y <= 2 * graph.n;
        return x >= 1 && x <= 2 * graph.n - 1 && y >= 1 && y <= 2 * graph.n - 1;
    }

    // Edge crossed when stepping from face f by the diagonal d, together with
    // the height sign (+1 when the white vertex is on the right of d).
    struct CrossData {
        int edge;
        int sign;
    };

    std::optional<CrossData> crossing(const Face& f, long dx, long dy) const {
        Face to{f.first + dx, f.second + dy};
        if (!valid(to)) return std::nullopt;
        std::pair<long, long> p1{f.first + dx, f.second};
        std::pair<long, long> p2{f.first, f.second + dy};
        std::pair<long, long> wp, bp;
        if ((p1.first & 1) != 0) {
            wp = p1;
            bp = p2;
        } else {
            wp = p2;
            bp = p1;
        }
        int wx = static_cast<int>((wp.first - 1) / 2);
        int wy = static_cast<int>(wp.second / 2 - 1);
        int bx = static_cast<int>(bp.first / 2);
        int by = static_cast<int>((bp.second - 1) / 2);
        if (!graph.valid_white(wx, wy) || !graph.valid_black(bx, by)) return std::nullopt;
        auto it = graph.edge_of_pair.find(
            {graph.white_index(wx, wy), graph.black_index(bx, by)});
        if (it == graph.edge_of_pair.end()) return std::nullopt;
        // White on the right of d: cross(d, 2w - p1 - p2) < 0.
        long cx = 2 * wp.first - p1.first - p2.first;
        long cy = 2 * wp.second - p1.second - p2.second;
        long cr = dx * cy - dy * cx;
        return CrossData{it->second, cr < 0 ? 1 : -1};
    }
};

} // namespace

HeightFieldReal expected_height_field(const AztecGraph& graph,
                                      const std::vector<Real>& marginals) {
    FaceLattice lattice{graph};
    HeightFieldReal field;
    field.max_closure_residual = 0;
    std::vector<Face> queue;
    field.values[{0, 0}] = 0;
    queue.push_back({0, 0});
    const long diag[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::size_t head = 0;
    while (head < queue.size()) {
        Face f = queue[head++];
        for (auto& d : diag) {
            auto cd = lattice.crossing(f, d[0], d[1]);
            if (!cd) continue;
            Face to{f.first + d[0], f.second + d[1]};
            const AztecEdge& e = graph.edges[cd->edge];
            Real inc = Real(cd->sign) *
                       (marginals[cd->edge] - (e.type == EdgeType::North ? 1 : 0));
            Real value = field.values[f] + inc;
            auto it = field.values.find(to);
            if (it == field.values.end()) {
                field.values[to] = value;
                queue.push_back(to);
            } else {
                Real r = abs(it->second - value);
                if (r > field.max_closure_residual) field.max_closure_residual = r;
            }
        }
    }
    return field;
}

HeightFieldInt cover_height(const AztecGraph& graph, const std::vector<int>& cover) {
    std::vector<char> in_cover(graph.edges.size(), 0);
    for (int e : cover) in_cover[e] = 1;
    FaceLattice lattice{graph};
    HeightFieldInt field;
    std::vector<Face> queue;
    field.values[{0, 0}] = 0;
    queue.push_back({0, 0});
    const long diag[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::size_t head = 0;
    while (head < queue.size()) {
        Face f = queue[head++];
        for (auto& d : diag) {
            auto cd = lattice.crossing(f, d[0], d[1]);
            if (!cd) continue;
            Face to{f.first + d[0], f.second + d[1]};
            const AztecEdge& e = graph.edges[cd->edge];
            long inc = cd->sign * ((in_cover[cd->edge] ? 1 : 0) -
                                   (e.type == EdgeType::North ? 1 : 0));
            long value = field.values[f] + inc;
            auto it = field.values.find(to);
            if (it == field.values.end()) {
                field.values[to] = value;
                queue.push_back(to);
            } else if (it->second != value) {
                throw ValidationError("InconsistentHeight",
                                      "height increments do not close up");
            }
        }
    }
    return field;
}

std::vector<int> sample_cover(const AztecGraph& graph, const Rational& beta, std::uint64_t seed,
                              int guard_n) {
    if (graph.n > guard_n)
        throw GuardError("SizeGuardExceeded",
                         "sampler limited to n <= " + std::to_string(guard_n));
    Real beta_r = beta_weight_guard(graph, beta);
    int nv = graph.n_white();
    std::vector<char> white_alive(nv, 1), black_alive(nv, 1);
    std::vector<std::vector<int>> edges_of_white(nv);
    for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e)
        edges_of_white[graph.edges[e].white].push_back(e);

    std::mt19937_64 rng(seed);
    auto draw_unit = [&rng]() {
        // 53 uniform bits; avoids platform differences in distributions.
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    std::vector<int> chosen(nv, -1);
    for (int step = 0; step < nv; ++step) {
        // Compact index maps for the alive submatrix.
        std::vector<int> wlist, blist, bpos(nv, -1);
        for (int v = 0; v < nv; ++v) {
            if (white_alive[v]) wlist.push_back(v);
            if (black_alive[v]) {
                bpos[v] = static_cast<int>(blist.size());
                blist.push_back(v);
            }
        }
        int m = static_cast<int>(wlist.size());
        std::vector<std::vector<Real>> kmat(m, std::vector<Real>(m, Real(0)));
        for (int r = 0; r < m; ++r)
            for (int e : edges_of_white[wlist[r]]) {
                const AztecEdge& ed = graph.edges[e];
                if (!black_alive[ed.black]) continue;
                kmat[r][bpos[ed.black]] = exp(beta_r * to_real(ed.logw)) * ed.sigma;
            }
        DenseLU lu;
        lu.factor(std::move(kmat));
        int w = wlist[0]; // lowest-indexed uncovered white
        std::vector<Real> rhs(m, Real(0));
        rhs[0] = 1;
        std::vector<Real> col = lu.solve(std::move(rhs));

        std::vector<std::pair<int, double>> probs;
        double total = 0;
        for (int e : edges_of_white[w]) {
            const AztecEdge& ed = graph.edges[e];
            if (!black_alive[ed.black]) continue;
            Real kwb = exp(beta_r * to_real(ed.logw)) * ed.sigma;
            double pe = (kwb * col[bpos[ed.black]]).convert_to<double>();
            if (pe < 0) pe = 0;
            probs.push_back({e, pe});
            total += pe;
        }
        if (probs.empty() || total <= 0)
            throw InternalError("SamplerDeadEnd", "no admissible edge at a white vertex");
        double u = draw_unit() * total;
        int picked = probs.back().first;
        for (auto& [e, pe] : probs) {
            if (u < pe) {
                picked = e;
                break;
            }
            u -= pe;
        }
        chosen[w] = picked;
        white_alive[w] = 0;
        black_alive[graph.edges[picked].black] = 0;
    }
    return chosen;
}

} // namespace tropaz
