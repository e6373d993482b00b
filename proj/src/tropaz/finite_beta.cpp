#include "tropaz/finite_beta.hpp"

#include <algorithm>

#include "tropaz/gibbs0.hpp"
#include "tropaz/newton.hpp"

namespace tropaz {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t t = s; !seen[t]; t = perm[t]) {
            seen[t] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace

SignedCoverSum char_poly_beta(const TorusGraph& graph) {
    SignedCoverSum sum;
    sum.k = graph.k;
    sum.ell = graph.ell;
    for (const DimerCover& cover : enumerate_covers(graph)) {
        std::vector<int> perm(graph.n_vertices());
        int sigma_product = 1;
        for (const EdgeRef& ref : cover.edges) {
            const TorusEdge& e = graph.edge(ref);
            perm[e.white] = e.black;
            sigma_product *= e.sigma;
        }
        CoverTerm term;
        term.sign = permutation_sign(perm) * sigma_product;
        term.energy = cover.energy;
        term.mu = cover.mu;
        sum.terms.push_back(term);
    }
    return sum;
}

void QuadratureSpec::validate() const {
    if (nodes < 16 || (nodes & (nodes - 1)) != 0)
        throw ValidationError("BadQuadrature", "node count must be a power of two >= 16");
}

namespace {

// Mean over the offset M x M tensor grid of log |sum_mu c_mu z^mu1 w^mu2|,
// plus beta*T, where c_mu collects e^{beta(a_D - T)} over covers.
Real ronkin_mesh(const SignedCoverSum& sum, const Rational& beta, const Rational& x,
                 const Rational& y, unsigned m, bool guard) {
    // Exponents a_D = E + x mu1 + y mu2; factor out the maximum T.
    std::vector<Rational> a;
    a.reserve(sum.terms.size());
    Rational t;
    for (std::size_t s = 0; s < sum.terms.size(); ++s) {
        const CoverTerm& term = sum.terms[s];
        Rational v = term.energy + x * term.mu.x + y * term.mu.y;
        a.push_back(v);
        if (s == 0 || v > t) t = v;
    }
    Real beta_r = to_real(beta);

    // Dominance guard: the dominant slope must be unique with non-cancelling
    // signs, and the scaled tail must stay below the dominant coefficient.
    if (guard) {
        long z0 = 0;
        bool mu_set = false;
        Vec2I mu_top;
        Real tail = 0;
        for (std::size_t s = 0; s < sum.terms.size(); ++s) {
            if (a[s] == t) {
                if (!mu_set) {
                    mu_top = sum.terms[s].mu;
                    mu_set = true;
                } else if (sum.terms[s].mu != mu_top) {
                    throw ValidationError("NearZeroOnTorus",
                                          "(x,y) is not strictly inside a complement component");
                }
                z0 += sum.terms[s].sign;
            } else {
                tail += exp(beta_r * to_real(a[s] - t));
            }
        }
        if (z0 == 0 || tail >= Real(z0 < 0 ? -z0 : z0))
            throw ValidationError("NearZeroOnTorus",
                                  "P_beta may vanish on the integration torus");
    }

    // Collapse the terms to one complex coefficient per slope.
    std::map<Vec2I, Real> coeff;
    for (std::size_t s = 0; s < sum.terms.size(); ++s) {
        Real c = Real(sum.terms[s].sign) * exp(beta_r * to_real(a[s] - t));
        auto [it, inserted] = coeff.emplace(sum.terms[s].mu, c);
        if (!inserted) it->second += c;
    }

    // Offset trapezoid nodes theta_a = 2 pi (a + 1/2) / m dodge symmetric zeros.
    Real two_pi = 2 * acos(Real(-1));
    std::vector<std::vector<Cplx>> zpow(m), wpow(m);
    for (unsigned i = 0; i < m; ++i) {
        Real theta = two_pi * (Real(i) + Real(1) / 2) / m;
        Cplx z = unit_phase(theta);
        Cplx zinv = z.conj(); // |z| = 1
        zpow[i].resize(sum.ell + 1);
        wpow[i].resize(sum.k + 1);
        zpow[i][0] = Cplx(Real(1));
        wpow[i][0] = Cplx(Real(1));
        for (int p = 1; p <= sum.ell; ++p) zpow[i][p] = zpow[i][p - 1] * zinv; // z^{-p}
        for (int p = 1; p <= sum.k; ++p) wpow[i][p] = wpow[i][p - 1] * z;      // w^{p}
    }

    Real acc = 0;
    for (unsigned ia = 0; ia < m; ++ia)
        for (unsigned ib = 0; ib < m; ++ib) {
            Cplx p;
            for (const auto& [mu, c] : coeff)
                p += zpow[ia][static_cast<int>(-mu.x)] * wpow[ib][static_cast<int>(mu.y)] * c;
            acc += log(p.abs2()) / 2;
        }
    return beta_r * to_real(t) + acc / (Real(m) * Real(m));
}

} // namespace

RonkinResult ronkin(const SignedCoverSum& sum, const Rational& beta, const Rational& x,
                    const Rational& y, const QuadratureSpec& spec) {
    spec.validate();
    RonkinResult result;
    result.value = ronkin_mesh(sum, beta, x, y, spec.nodes, true);
    Real refined = ronkin_mesh(sum, beta, x, y, 2 * spec.nodes, false);
    result.error_estimate = abs(result.value - refined);
    return result;
}

Real surface_tension_beta(const SignedCoverSum& sum, const Vec2I& mu, const Rational& beta,
                          const QuadratureSpec& spec, const Vec2Q& anchor) {
    spec.validate();
    Real r = ronkin_mesh(sum, beta, anchor.x, anchor.y, spec.nodes, true);
    Real beta_r = to_real(beta);
    return -r + Real(mu.x) * beta_r * to_real(anchor.x) + Real(mu.y) * beta_r * to_real(anchor.y);
}

Vec2Q anchor_point(const SurfaceTensionTable& table, const TropicalCurve& curve,
                   const Vec2I& mu) {
    auto it = curve.components.find(mu);
    if (it == curve.components.end())
        throw ValidationError("EmptyComponentInterior", "mu has no component");
    const ComponentBoundary& cb = it->second;
    if (cb.vertices.empty())
        throw ValidationError("EmptyComponentInterior", "component has no vertices");
    Vec2Q base(Rational(0), Rational(0));
    for (int v : cb.vertices) base = base + curve.vertices[v].pos;
    Rational nv(static_cast<long>(cb.vertices.size()));
    base = Vec2Q(base.x / nv, base.y / nv);

    auto interior = [&](const Vec2Q& p) {
        auto [value, argmax] = eval_tropical_poly(table, p.x, p.y);
        (void)value;
        return argmax.size() == 1 && argmax[0] == mu;
    };
    if (cb.closed) {
        if (interior(base)) return base;
        throw ValidationError("EmptyComponentInterior", "centroid not interior (degenerate)");
    }
    // Unbounded component: push outward along the bisector of the two leaves.
    const CurveLeaf& first = curve.leaves[cb.items.front().index];
    const CurveLeaf& last = curve.leaves[cb.items.back().index];
    Vec2I out = (-first.eta_in) + (-last.eta_in);
    Vec2I dir{out.x > 0 ? 1 : (out.x < 0 ? -1 : 0), out.y > 0 ? 1 : (out.y < 0 ? -1 : 0)};
    for (long t = 1; t <= (1L << 20); t *= 2) {
        Vec2Q p = base + Vec2Q(Rational(dir.x) * t, Rational(dir.y) * t);
        if (interior(p)) return p;
    }
    throw ValidationError("EmptyComponentInterior", "no interior anchor found");
}

Real gibbs_beta_marginal(const TorusGraph& graph, const std::vector<LiftedEdge>& edges,
                         const Vec2Q& xy, const Rational& beta, const QuadratureSpec& spec) {
    spec.validate();
    std::size_t p = edges.size();
    if (p == 0) return Real(1);
    int nv = graph.n_vertices();
    Real beta_r = to_real(beta);
    unsigned m = spec.nodes;
    Real two_pi = 2 * acos(Real(-1));

    // Per-edge constant magnitudes: |entry| = e^{beta (logw - cu x + cv y)}.
    struct Entry {
        int white, black;
        Real magnitude;
        int cu, cv, sigma;
    };
    std::vector<Entry> entries;
    for (const TorusEdge& e : graph.edges) {
        Entry en;
        en.white = e.white;
        en.black = e.black;
        en.cu = e.cross_u;
        en.cv = e.cross_v;
        en.sigma = e.sigma;
        en.magnitude = exp(beta_r * to_real(e.logw - xy.x * e.cross_u + xy.y * e.cross_v));
        entries.push_back(en);
    }

    // Displacement exponents per requested pair: z^{n' - n} w^{-(m' - m)}.
    struct Pair {
        int b_cell, w_cell;
        long dz, dw;
    };
    std::vector<LiftedVertex> blacks, whites;
    for (const LiftedEdge& e : edges) {
        whites.push_back(lifted_white(e));
        blacks.push_back(lifted_black(e, graph));
    }
    std::vector<std::vector<Pair>> pairs(p, std::vector<Pair>(p));
    long max_abs_exp = 0;
    for (std::size_t s = 0; s < p; ++s)
        for (std::size_t t = 0; t < p; ++t) {
            Pair pr;
            pr.b_cell = graph.vertex_index(blacks[s].i, blacks[s].j);
            pr.w_cell = graph.vertex_index(whites[t].i, whites[t].j);
            pr.dz = whites[t].n - blacks[s].n;
            pr.dw = -(whites[t].m - blacks[s].m);
            max_abs_exp = std::max({max_abs_exp, std::abs(pr.dz), std::abs(pr.dw)});
            pairs[s][t] = pr;
        }

    std::vector<std::vector<Cplx>> acc(p, std::vector<Cplx>(p));
    std::vector<std::vector<Cplx>> kmat(nv, std::vector<Cplx>(nv));
    std::vector<Cplx> rhs(nv);

    for (unsigned ia = 0; ia < m; ++ia) {
        Real theta = two_pi * (Real(ia) + Real(1) / 2) / m;
        Cplx z = unit_phase(theta);
        for (unsigned ib = 0; ib < m; ++ib) {
            Real phi = two_pi * (Real(ib) + Real(1) / 2) / m;
            Cplx w = unit_phase(phi);
            for (auto& row : kmat) std::fill(row.begin(), row.end(), Cplx());
            for (const Entry& en : entries) {
                Cplx phase = cpow(z, -en.cu) * cpow(w, en.cv);
                kmat[en.white][en.black] += phase * (en.magnitude * en.sigma);
            }
            // LU with partial pivoting, in place.
            std::vector<std::vector<Cplx>> lu = kmat;
            std::vector<int> piv(nv);
            Real max_abs2 = 0;
            for (int r = 0; r < nv; ++r)
                for (int c = 0; c < nv; ++c) {
                    Real a2 = lu[r][c].abs2();
                    if (a2 > max_abs2) max_abs2 = a2;
                }
            for (int col = 0; col < nv; ++col) {
                int best = col;
                Real best_abs2 = lu[col][col].abs2();
                for (int r = col + 1; r < nv; ++r)
                    if (lu[r][col].abs2() > best_abs2) {
                        best = r;
                        best_abs2 = lu[r][col].abs2();
                    }
                if (best_abs2 == 0 || best_abs2 < max_abs2 * Real("1e-120"))
                    throw ValidationError("SingularKasteleynOnContour",
                                          "magnetic Kasteleyn matrix is singular at a node");
                std::swap(lu[best], lu[col]);
                piv[col] = best;
                for (int r = col + 1; r < nv; ++r) {
                    Cplx f = lu[r][col] / lu[col][col];
                    lu[r][col] = f;
                    for (int c = col + 1; c < nv; ++c) lu[r][c] -= f * lu[col][c];
                }
            }
            // One solve per distinct white column.
            for (std::size_t t = 0; t < p; ++t) {
                int wc = pairs[0][t].w_cell;
                std::fill(rhs.begin(), rhs.end(), Cplx());
                rhs[wc] = Cplx(Real(1));
                for (int col = 0; col < nv; ++col) std::swap(rhs[col], rhs[piv[col]]);
                for (int r = 0; r < nv; ++r)
                    for (int c = 0; c < r; ++c) rhs[r] -= lu[r][c] * rhs[c];
                for (int r = nv - 1; r >= 0; --r) {
                    for (int c = r + 1; c < nv; ++c) rhs[r] -= lu[r][c] * rhs[c];
                    rhs[r] = rhs[r] / lu[r][r];
                }
                for (std::size_t s = 0; s < p; ++s) {
                    const Pair& pr = pairs[s][t];
                    Cplx phase = cpow(z, pr.dz) * cpow(w, pr.dw);
                    acc[s][t] += rhs[pr.b_cell] * phase;
                }
            }
        }
    }

    Real mm = Real(m) * Real(m);
    std::vector<std::vector<Cplx>> det_mat(p, std::vector<Cplx>(p));
    for (std::size_t s = 0; s < p; ++s)
        for (std::size_t t = 0; t < p; ++t) {
            const TorusEdge& e = graph.edge(edges[t].ref);
            Real kwb = exp(beta_r * to_real(e.logw)) * e.sigma;
            det_mat[s][t] = acc[s][t] * (kwb / mm);
        }
    // Small complex determinant by Gaussian elimination.
    Cplx det(Real(1));
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (det_mat[r][col].abs2() > det_mat[best][col].abs2()) best = r;
        if (det_mat[best][col].abs2() == 0) return Real(0);
        if (best != col) {
            std::swap(det_mat[best], det_mat[col]);
            det = det * Cplx(Real(-1));
        }
        det = det * det_mat[col][col];
        for (std::size_t r = col + 1; r < p; ++r) {
            Cplx f = det_mat[r][col] / det_mat[col][col];
            for (std::size_t c = col; c < p; ++c) det_mat[r][c] -= f * det_mat[col][c];
        }
    }
    return det.re;
}

} // namespace tropaz
