#ifndef TROPAZ_CURVE_HPP
#define TROPAZ_CURVE_HPP

#include <map>
#include <vector>

#include "tropaz/newton.hpp"

namespace tropaz {

struct CurveVertex {
    Vec2Q pos;
    int face = -1; // dual subdivision face
};

struct CurveEdge {
    int v_from = -1;
    int v_to = -1;
    Vec2I eta;        // primitive direction from v_from to v_to
    Rational length;  // positive; pos(v_to) - pos(v_from) = length * eta
    int dual_edge = -1;
};

enum class LeafGroup : int { L1 = 0, L2 = 1, L3 = 2, L4 = 3 };

struct CurveLeaf {
    int vertex = -1;
    Vec2I eta_in;       // primitive direction pointing toward the vertex
    LeafGroup group;    // L1 left, L2 down, L3 right, L4 up (outward direction)
    Rational line_coord; // y of the leaf line for L1/L3, x for L2/L4
    int dual_edge = -1;
};

// One item of a component boundary walk.
struct WalkItem {
    bool leaf = false;
    int index = -1; // into edges or leaves
};

// The boundary of the complement component dual to mu, listed counterclockwise
// around mu in the subdivision; the component interior lies to the left when
// traversing the walk in order.
struct ComponentBoundary {
    Vec2I mu;
    bool closed = false;
    std::vector<WalkItem> items;
    std::vector<int> vertices; // walk vertices between consecutive items
};

struct TropicalCurve {
    int k = 1;
    int ell = 1;
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;
    std::vector<CurveLeaf> leaves;
    std::vector<int> vertex_of_face; // face id -> vertex id
    std::map<Vec2I, ComponentBoundary> components;

    // The three incident items at a vertex with their outward primitive vectors.
    struct Incidence {
        WalkItem item;
        Vec2I eta_out;
    };
    std::vector<Incidence> incident(int vertex) const;
};

// Requires a smooth subdivision; throws NotSmooth otherwise.
TropicalCurve build_curve(const Subdivision& sub, const SurfaceTensionTable& table);

const ComponentBoundary& component_boundary(const TropicalCurve& curve, const Vec2I& mu);

// Beta-independent leaf line coordinates straight from the weights.
struct LeafLines {
    std::vector<Rational> l1_y;
    std::vector<Rational> l2_x;
    std::vector<Rational> l3_y;
    std::vector<Rational> l4_x;
};

LeafLines leaf_lines_from_weights(const FundamentalDomain& domain);
LeafLines leaf_lines_of_curve(const TropicalCurve& curve);

} // namespace tropaz

#endif
