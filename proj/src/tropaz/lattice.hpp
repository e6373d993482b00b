#ifndef TROPAZ_LATTICE_HPP
#define TROPAZ_LATTICE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tropaz/rational.hpp"

namespace tropaz {

// The four edge types at a white vertex w_{x,y}:
//   West  = b_{x,y}   w_{x,y}
//   South = b_{x,y+1} w_{x,y}
//   East  = b_{x+1,y+1} w_{x,y}
//   North = b_{x+1,y} w_{x,y}
enum class EdgeType : int { West = 0, South = 1, East = 2, North = 3 };

constexpr std::array<EdgeType, 4> kEdgeTypes = {EdgeType::West, EdgeType::South,
                                                EdgeType::East, EdgeType::North};

const char* edge_type_name(EdgeType t);
EdgeType parse_edge_type(const std::string& name); // "West" or "W", case-sensitive

// An edge of the fundamental domain, identified by the cell (i, j) of its
// white endpoint and its type.
struct EdgeRef {
    int i = 0;
    int j = 0;
    EdgeType type = EdgeType::West;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string edge_ref_string(const EdgeRef& e);

// An edge of the lift to the plane: `m, n` are the copy offsets of the white
// endpoint, i.e. the white vertex is w_{ell*m+i, k*n+j}.
struct LiftedEdge {
    EdgeRef ref;
    long m = 0;
    long n = 0;

    friend auto operator<=>(const LiftedEdge&, const LiftedEdge&) = default;
};

// k x ell cell of exact rational log-weights, one value per (i, j, type).
struct FundamentalDomain {
    int k = 1;
    int ell = 1;
    std::map<EdgeRef, Rational> logw;

    const Rational& log_weight(const EdgeRef& e) const;
    // Weight of the lifted edge at white w_{x,y} with arbitrary integer x, y.
    const Rational& log_weight_at(long x, long y, EdgeType t) const;
};

// Validates periods and the completeness of the weight table.
FundamentalDomain make_fundamental_domain(int k, int ell, std::map<EdgeRef, Rational> logw);

struct TorusEdge {
    EdgeRef ref;
    int white = 0;    // index of w_{i,j}
    int black = 0;    // index of the black endpoint on the torus
    int sigma = 1;    // Kasteleyn sign, -1 on North edges
    int cross_u = 0;  // 1 iff the edge intersects gamma_u
    int cross_v = 0;  // 1 iff the edge intersects gamma_v
    Rational logw;
};

// The fundamental domain wrapped on the torus. Vertices are indexed in
// row-major (i, j) order: idx = i*k + j. Edges are listed white-by-white in
// that order with types in order West, South, East, North.
struct TorusGraph {
    int k = 1;
    int ell = 1;
    std::vector<TorusEdge> edges;
    std::vector<std::vector<int>> white_edges; // edge ids incident to each white
    std::vector<std::vector<int>> black_edges;

    int n_vertices() const { return k * ell; }
    int vertex_index(int i, int j) const { return i * k + j; }
    int edge_index(const EdgeRef& e) const { return vertex_index(e.i, e.j) * 4 + static_cast<int>(e.type); }
    const TorusEdge& edge(const EdgeRef& e) const { return edges[edge_index(e)]; }

    // Cell of the black endpoint of an edge, and the copy offsets (dm, dn)
    // the black endpoint picks up relative to the white one.
    std::pair<int, int> black_cell(const EdgeRef& e) const;
    std::pair<int, int> black_copy_shift(const EdgeRef& e) const;
};

TorusGraph build_torus_graph(const FundamentalDomain& domain);

// Slope and energy of a perfect matching of the torus graph:
//   mu = (-sum e^gamma_u, sum e^gamma_v),  E = sum log nu(e).
std::pair<Vec2I, Rational> slope_and_energy(const std::vector<EdgeRef>& cover,
                                            const TorusGraph& graph);

} // namespace tropaz

#endif
