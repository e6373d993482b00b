#include "tropaz/lattice.hpp"

#include <sstream>

namespace tropaz {

const char* edge_type_name(EdgeType t) {
    switch (t) {
        case EdgeType::West: return "West";
        case EdgeType::South: return "South";
        case EdgeType::East: return "East";
        case EdgeType::North: return "North";
    }
    return "?";
}

EdgeType parse_edge_type(const std::string& name) {
    if (name == "West" || name == "W") return EdgeType::West;
    if (name == "South" || name == "S") return EdgeType::South;
    if (name == "East" || name == "E") return EdgeType::East;
    if (name == "North" || name == "N") return EdgeType::North;
    throw ValidationError("MissingEdgeWeight", "unknown edge type '" + name + "'");
}

std::string edge_ref_string(const EdgeRef& e) {
    std::ostringstream os;
    os << e.i << "," << e.j << "," << edge_type_name(e.type);
    return os.str();
}

const Rational& FundamentalDomain::log_weight(const EdgeRef& e) const {
    auto it = logw.find(e);
    if (it == logw.end())
        throw ValidationError("MissingEdgeWeight", "no weight for edge " + edge_ref_string(e));
    return it->second;
}

const Rational& FundamentalDomain::log_weight_at(long x, long y, EdgeType t) const {
    int i = static_cast<int>(((x % ell) + ell) % ell);
    int j = static_cast<int>(((y % k) + k) % k);
    return log_weight({i, j, t});
}

FundamentalDomain make_fundamental_domain(int k, int ell, std::map<EdgeRef, Rational> logw) {
    if (k < 1 || ell < 1)
        throw ValidationError("NonPositivePeriod",
                              "periods must be >= 1, got k=" + std::to_string(k) +
                                  " ell=" + std::to_string(ell));
    FundamentalDomain d;
    d.k = k;
    d.ell = ell;
    d.logw = std::move(logw);
    std::size_t expected = static_cast<std::size_t>(4) * k * ell;
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < k; ++j)
            for (EdgeType t : kEdgeTypes) {
                EdgeRef e{i, j, t};
                if (!d.logw.count(e))
                    throw ValidationError("MissingEdgeWeight",
                                          "missing weight for edge " + edge_ref_string(e));
            }
    if (d.logw.size() != expected)
        throw ValidationError("MissingEdgeWeight",
                              "weight table has extra entries outside the fundamental domain");
    return d;
}

std::pair<int, int> TorusGraph::black_cell(const EdgeRef& e) const {
    switch (e.type) {
        case EdgeType::West: return {e.i, e.j};
        case EdgeType::South: return {e.i, (e.j + 1) % k};
        case EdgeType::East: return {(e.i + 1) % ell, (e.j + 1) % k};
        case EdgeType::North: return {(e.i + 1) % ell, e.j};
    }
    return {0, 0};
}

std::pair<int, int> TorusGraph::black_copy_shift(const EdgeRef& e) const {
    int dm = 0, dn = 0;
    if ((e.type == EdgeType::East || e.type == EdgeType::North) && e.i == ell - 1) dm = 1;
    if ((e.type == EdgeType::South || e.type == EdgeType::East) && e.j == k - 1) dn = 1;
    return {dm, dn};
}

TorusGraph build_torus_graph(const FundamentalDomain& domain) {
    TorusGraph g;
    g.k = domain.k;
    g.ell = domain.ell;
    int nv = g.n_vertices();
    g.white_edges.assign(nv, {});
    g.black_edges.assign(nv, {});
    g.edges.reserve(static_cast<std::size_t>(4) * nv);
    for (int i = 0; i < g.ell; ++i)
        for (int j = 0; j < g.k; ++j)
            for (EdgeType t : kEdgeTypes) {
                EdgeRef ref{i, j, t};
                TorusEdge e;
                e.ref = ref;
                e.white = g.vertex_index(i, j);
                auto [bi, bj] = g.black_cell(ref);
                e.black = g.vertex_index(bi, bj);
                e.sigma = (t == EdgeType::North) ? -1 : 1;
                e.cross_u = ((t == EdgeType::South || t == EdgeType::East) && j == g.k - 1) ? 1 : 0;
                e.cross_v = ((t == EdgeType::East || t == EdgeType::North) && i == g.ell - 1) ? 1 : 0;
                e.logw = domain.log_weight(ref);
                int id = static_cast<int>(g.edges.size());
                g.edges.push_back(e);
                g.white_edges[e.white].push_back(id);
                g.black_edges[e.black].push_back(id);
            }
    return g;
}

std::pair<Vec2I, Rational> slope_and_energy(const std::vector<EdgeRef>& cover,
                                            const TorusGraph& graph) {
    int nv = graph.n_vertices();
    if (static_cast<int>(cover.size()) != nv)
        throw ValidationError("NotAPerfectMatching",
                              "cover has " + std::to_string(cover.size()) + " edges, expected " +
                                  std::to_string(nv));
    std::vector<int> white_deg(nv, 0), black_deg(nv, 0);
    Vec2I mu{0, 0};
    Rational energy = 0;
    for (const EdgeRef& ref : cover) {
        if (ref.i < 0 || ref.i >= graph.ell || ref.j < 0 || ref.j >= graph.k)
            throw ValidationError("NotAPerfectMatching", "edge outside domain: " + edge_ref_string(ref));
        const TorusEdge& e = graph.edge(ref);
        ++white_deg[e.white];
        ++black_deg[e.black];
        mu.x -= e.cross_u;
        mu.y += e.cross_v;
        energy += e.logw;
    }
    for (int v = 0; v < nv; ++v)
        if (white_deg[v] != 1 || black_deg[v] != 1)
            throw ValidationError("NotAPerfectMatching", "vertex covered != once");
    return {mu, energy};
}

} // namespace tropaz
