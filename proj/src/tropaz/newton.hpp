#ifndef TROPAZ_NEWTON_HPP
#define TROPAZ_NEWTON_HPP

#include <map>
#include <string>
#include <vector>

#include "tropaz/covers.hpp"

namespace tropaz {

enum class PointClass { Corner, Boundary, Interior }; // F, Q, S

struct NewtonPolygon {
    int k = 1;
    int ell = 1;

    std::vector<Vec2I> lattice_points() const; // all of N, row-major
    bool contains(const Vec2I& mu) const;
    PointClass classify(const Vec2I& mu) const;
};

// Boundary side of the rectangle; numbering follows the leaf groups
// L1..L4 of the tropical curve.
enum class Side : int { Left = 0, Bottom = 1, Right = 2, Top = 3 };

struct SubFace {
    std::vector<Vec2I> poly;       // hull vertices, counterclockwise
    std::vector<Vec2I> on_edge;    // equality-set points interior to a side of poly
    std::vector<Vec2I> interior;   // equality-set points interior to poly
    // Supporting plane s = a*m1 + b*m2 + c of the lift over this face.
    Rational a, b, c;

    Rational area2() const; // twice the (positive) area
};

struct SubEdge {
    Vec2I u, v;       // endpoints, with u < v lexicographically
    int face0 = -1;   // adjacent face
    int face1 = -1;   // second face, or -1 for boundary edges
    int side = -1;    // boundary side tag as int(Side), or -1 for interior edges

    bool boundary() const { return face1 < 0; }
};

struct Subdivision {
    int k = 1;
    int ell = 1;
    std::map<Vec2I, Rational> lift; // E* values
    std::vector<SubFace> faces;
    std::vector<SubEdge> edges;

    NewtonPolygon polygon() const { return {k, ell}; }
    // mu is a vertex of the subdivision iff its lifted point is a vertex of
    // the extended polyhedral domain.
    bool is_vertex(const Vec2I& mu) const;
    int face_containing_edge_pair(const Vec2I& mu, int edge_a, int edge_b) const;
    std::vector<int> edges_at(const Vec2I& mu) const;
};

Subdivision build_subdivision(const SurfaceTensionTable& table);

struct GenericityIssue {
    std::string kind; // NonVertexLatticePoint | NonTriangleFace | OversizedTriangle
    std::vector<Vec2I> points;
};

struct GenericityReport {
    bool smooth = false;
    std::vector<GenericityIssue> reasons;
};

GenericityReport classify_genericity(const Subdivision& sub);

// P_t(x, y) together with the set of slopes attaining the maximum.
std::pair<Rational, std::vector<Vec2I>> eval_tropical_poly(const SurfaceTensionTable& table,
                                                           const Rational& x, const Rational& y);

} // namespace tropaz

#endif
