#ifndef TROPAZ_FINITE_BETA_HPP
#define TROPAZ_FINITE_BETA_HPP

#include "tropaz/curve.hpp"
#include "tropaz/mp.hpp"

namespace tropaz {

// One term per torus dimer cover of the characteristic polynomial
// P_beta(z,w) = sum sign * e^{beta E} z^{mu1} w^{mu2}.
struct CoverTerm {
    int sign = 1; // sgn(s(D)) * prod sigma(e)
    Rational energy;
    Vec2I mu;
};

struct SignedCoverSum {
    int k = 1;
    int ell = 1;
    std::vector<CoverTerm> terms;
};

SignedCoverSum char_poly_beta(const TorusGraph& graph);

struct QuadratureSpec {
    unsigned nodes = 256; // per circle, power of two, >= 16
    void validate() const;
};

struct RonkinResult {
    Real value;          // quadrature at `nodes`
    Real error_estimate; // |R_M - R_{M/2}| style estimate from M vs 2M
};

// Ronkin function R_beta(x, y) of P_beta by tensor-product quadrature over
// the unit torus, with the dominant exponent factored out. Requires (x, y)
// strictly inside a complement component of the tropical curve.
RonkinResult ronkin(const SignedCoverSum& sum, const Rational& beta, const Rational& x,
                    const Rational& y, const QuadratureSpec& spec);

// sigma_beta(mu) = -R_beta(x, y) + mu1 beta x + mu2 beta y with (x, y) inside
// the component of mu.
Real surface_tension_beta(const SignedCoverSum& sum, const Vec2I& mu, const Rational& beta,
                          const QuadratureSpec& spec, const Vec2Q& anchor);

// Interior anchor point of the complement component A_{t,mu}: centroid of the
// component's curve vertices for bounded components, pushed outward along the
// leaf bisector for unbounded ones.
Vec2Q anchor_point(const SurfaceTensionTable& table, const TropicalCurve& curve, const Vec2I& mu);

// Finite-temperature Gibbs edge probabilities by double contour quadrature
// of the inverse magnetic Kasteleyn matrix on |z| = e^{beta x}, |w| = e^{beta y}.
Real gibbs_beta_marginal(const TorusGraph& graph, const std::vector<LiftedEdge>& edges,
                         const Vec2Q& xy, const Rational& beta, const QuadratureSpec& spec);

} // namespace tropaz

#endif
