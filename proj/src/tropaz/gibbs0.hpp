#ifndef TROPAZ_GIBBS0_HPP
#define TROPAZ_GIBBS0_HPP

#include <map>

#include "tropaz/covers.hpp"
#include "tropaz/laurent.hpp"

namespace tropaz {

// A lifted black or white vertex: cell (i, j) in copy (m, n).
struct LiftedVertex {
    int i = 0;
    int j = 0;
    long m = 0;
    long n = 0;
};

// Magnetically altered Kasteleyn matrix of G_{1,mu}: rows are white vertices,
// columns black, entry sum over parallel edges of sigma * z^{-e^gamma_u} * w^{e^gamma_v}.
LaurentMatrix laurent_kasteleyn(const MaximizerGraph& mg, const TorusGraph& graph);

struct GibbsZeroMeasure {
    Vec2I mu;
    int tau = 1;
    BigInt z1mu;            // partition function of G_{1,mu}
    LaurentPoly char_poly;  // tau * Z * z^mu1 w^mu2
    LaurentMatrix adjugate; // adj(K)[black][white]
    MaximizerGraph mg;
};

// Determinant of the Kasteleyn matrix; asserts the single-monomial form
// tau * Z_{1,mu} * z^{mu1} w^{mu2} and extracts tau and Z.
std::tuple<LaurentPoly, int, BigInt> char_poly_mu(const LaurentMatrix& k, const Vec2I& mu);

GibbsZeroMeasure gibbs_zero_measure(const SurfaceTensionTable& table, const TorusGraph& graph,
                                    const Vec2I& mu);

// (K_{G_mu}^{-1})_{b w}: the Laurent coefficient of z^{n-n'} w^{m'-m} in
// adj(K)_{b w} / (tau Z z^{mu1} w^{mu2}).
Rational inverse_coefficient(const GibbsZeroMeasure& measure, const TorusGraph& graph,
                             const LiftedVertex& black, const LiftedVertex& white);

// Joint edge probabilities of the zero-temperature measure P_mu.
Rational edge_probabilities(const GibbsZeroMeasure& measure, const TorusGraph& graph,
                            const std::vector<LiftedEdge>& edges);

// Uniform-measure marginals on one finite component of the lift, by brute
// force enumeration of its matchings.
std::map<LiftedEdge, Rational> oracle_component_measure(const LiftComponent& component,
                                                        const TorusGraph& graph);

// Endpoints of a lifted edge.
LiftedVertex lifted_white(const LiftedEdge& e);
LiftedVertex lifted_black(const LiftedEdge& e, const TorusGraph& graph);

} // namespace tropaz

#endif
