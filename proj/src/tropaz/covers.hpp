#ifndef TROPAZ_COVERS_HPP
#define TROPAZ_COVERS_HPP

#include <map>
#include <vector>

#include "tropaz/lattice.hpp"

namespace tropaz {

struct Subdivision; // newton.hpp

// A perfect matching of the torus graph; edges[w] is the edge covering the
// white vertex with index w.
struct DimerCover {
    std::vector<EdgeRef> edges;
    Vec2I mu;
    Rational energy;
};

// Depth-first enumeration of all perfect matchings, white vertices in
// row-major (i, j) order and edge types in order W, S, E, N. The output
// order is deterministic.
std::vector<DimerCover> enumerate_covers(const TorusGraph& graph, int guard_cells = 16);

struct TensionEntry {
    Rational estar;
    std::vector<int> maximizers; // indices into SurfaceTensionTable::covers
    long n_covers = 0;
};

struct SurfaceTensionTable {
    int k = 1;
    int ell = 1;
    std::vector<DimerCover> covers; // full enumeration, deterministic order
    std::map<Vec2I, TensionEntry> entries;

    const TensionEntry& at(const Vec2I& mu) const;
};

SurfaceTensionTable surface_tension_table(const TorusGraph& graph);

// One connected component of the lift G_mu, anchored at a representative:
// vertices carry copy offsets relative to the anchor copy.
struct LiftComponent {
    bool bounded = true;
    // Offsets are relative: (is_white, i, j, m, n). Only populated when bounded.
    struct Vtx {
        bool white;
        int i, j;
        long m, n;
        friend auto operator<=>(const Vtx&, const Vtx&) = default;
    };
    std::vector<Vtx> vertices;
    std::vector<LiftedEdge> edges; // lifted edges of the component (relative offsets)
};

struct MaximizerGraph {
    Vec2I mu;
    std::vector<EdgeRef> edges; // E_{1,mu}, sorted
    std::vector<LiftComponent> components;
    bool all_bounded = true;

    bool contains(const EdgeRef& e) const;
};

MaximizerGraph maximizer_graph(const SurfaceTensionTable& table, const TorusGraph& graph,
                               const Vec2I& mu);

// True iff the lifted point of mu is a vertex of the regular subdivision.
bool is_strictly_concave(const SurfaceTensionTable& table, const Subdivision& sub,
                         const Vec2I& mu);

// Partitions the edge multiset of the input covers into d covers of slope
// mu = (sum mu_i)/d via the torus height-function coloring.
std::vector<DimerCover> color_multiweb(const std::vector<DimerCover>& input,
                                       const TorusGraph& graph);

} // namespace tropaz

#endif
