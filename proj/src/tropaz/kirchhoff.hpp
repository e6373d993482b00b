#ifndef TROPAZ_KIRCHHOFF_HPP
#define TROPAZ_KIRCHHOFF_HPP

#include <map>
#include <vector>

#include "tropaz/curve.hpp"

namespace tropaz {

// A tropical 1-form: one value per bounded edge in its canonical orientation
// (v_from -> v_to) and one per leaf in the inward orientation. Values flip
// sign under orientation reversal.
struct OneForm {
    std::vector<Rational> edge_values;
    std::vector<Rational> leaf_values;

    Rational on(const TropicalCurve& curve, const WalkItem& item, const Vec2I& eta) const;
};

struct DualActionFunction {
    Vec2I gauge_mu0;                 // (0, k); f*(mu0) = 0
    std::map<Vec2I, Rational> fstar; // values on all of N
    std::vector<Vec2Q> face_gradients; // per subdivision face

    const Rational& at(const Vec2I& mu) const;
};

// Solves the Kirchhoff problem on the subdivided Newton polygon: weighted
// Laplacian zero at interior lattice points, boundary slopes -ell (left,
// upward steps), k (bottom, leftward steps), 0 (right and top).
DualActionFunction solve_dual(const Subdivision& sub, const TropicalCurve& curve);

struct PrimalGradients {
    OneForm df;                        // df_t
    std::vector<Vec2Q> vertex_gradients; // (d_x f_t, d_y f_t) per curve vertex
};

PrimalGradients derive_primal(const DualActionFunction& fstar, const Subdivision& sub,
                              const TropicalCurve& curve);

struct ExactnessReport {
    bool exact = false;
    Rational residue_sum;
    std::vector<Rational> cycle_integrals; // one per independent cycle
};

ExactnessReport verify_exactness(const OneForm& form, const TropicalCurve& curve);

// Leaf residues of df_t: -ell on L1, k on L2, 0 on L3 and L4 (inward).
Rational leaf_residue(LeafGroup group, int k, int ell);

} // namespace tropaz

#endif
