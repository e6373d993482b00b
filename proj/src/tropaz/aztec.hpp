#ifndef TROPAZ_AZTEC_HPP
#define TROPAZ_AZTEC_HPP

#include <cstdint>
#include <map>

#include "tropaz/lattice.hpp"
#include "tropaz/mp.hpp"

namespace tropaz {

// Aztec diamond of size n = k*ell*N. Blacks b_{x,y} with x in 0..n,
// y in 0..n-1; whites w_{x,y} with x in 0..n-1, y in -1..n-1. In the plane,
// b_{x,y} sits at (2x, 2y+1) and w_{x,y} at (2x+1, 2y+2); face midpoints are
// (2x, 2y) for x,y in 0..n and (2x+1, 2y+1) for x,y in 0..n-1.
struct AztecEdge {
    int x, y; // white endpoint w_{x,y}
    EdgeType type;
    int white, black; // vertex indices
    Rational logw;
    int sigma;
};

struct AztecGraph {
    int k = 1, ell = 1, N = 1, n = 1;
    std::vector<AztecEdge> edges;
    std::map<std::pair<int, int>, int> edge_of_pair; // (white, black) -> edge id

    int n_white() const { return n * (n + 1); }
    int white_index(int x, int y) const { return x * (n + 1) + (y + 1); }
    int black_index(int x, int y) const { return x * n + y; }
    bool valid_white(int x, int y) const { return x >= 0 && x < n && y >= -1 && y < n; }
    bool valid_black(int x, int y) const { return x >= 0 && x <= n && y >= 0 && y < n; }
};

AztecGraph build_aztec(const FundamentalDomain& domain, int N);

// All dimer covers, as vectors of edge ids indexed by white vertex. For
// small n only (brute force, used as an oracle).
std::vector<std::vector<int>> enumerate_aztec_covers(const AztecGraph& graph, int guard_n = 4);

// Edge marginals P[e in D] via one dense arbitrary-precision factorization
// of the Kasteleyn matrix; indexed like graph.edges.
std::vector<Real> aztec_edge_marginals(const AztecGraph& graph, const Rational& beta,
                                       int guard_n = 48);

using Face = std::pair<long, long>;

struct HeightFieldReal {
    std::map<Face, Real> values;
    Real max_closure_residual;
};

struct HeightFieldInt {
    std::map<Face, long> values;
};

// Expected height field E[h] from edge marginals; h(0,0) = 0.
HeightFieldReal expected_height_field(const AztecGraph& graph, const std::vector<Real>& marginals);

// Exact integer height function of a dimer cover (edge ids per white vertex).
HeightFieldInt cover_height(const AztecGraph& graph, const std::vector<int>& cover);

// Exact sequential sampler; deterministic for a fixed seed.
std::vector<int> sample_cover(const AztecGraph& graph, const Rational& beta, std::uint64_t seed,
                              int guard_n = 32);

} // namespace tropaz

#endif
