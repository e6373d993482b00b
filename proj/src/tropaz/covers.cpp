#include "tropaz/covers.hpp"

#include <algorithm>
#include <queue>

#include "tropaz/newton.hpp"

namespace tropaz {

std::vector<DimerCover> enumerate_covers(const TorusGraph& graph, int guard_cells) {
    int nv = graph.n_vertices();
    if (nv > guard_cells)
        throw GuardError("SizeGuardExceeded", "k*ell = " + std::to_string(nv) +
                                                  " exceeds enumeration guard " +
                                                  std::to_string(guard_cells));
    std::vector<DimerCover> out;
    std::vector<EdgeRef> current(nv);
    std::vector<char> black_used(nv, 0);

    auto rec = [&](auto&& self, int w) -> void {
        if (w == nv) {
            auto [mu, energy] = slope_and_energy(current, graph);
            out.push_back(DimerCover{current, mu, energy});
            return;
        }
        for (int id : graph.white_edges[w]) {
            const TorusEdge& e = graph.edges[id];
            if (black_used[e.black]) continue;
            black_used[e.black] = 1;
            current[w] = e.ref;
            self(self, w + 1);
            black_used[e.black] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

const TensionEntry& SurfaceTensionTable::at(const Vec2I& mu) const {
    auto it = entries.find(mu);
    if (it == entries.end())
        throw ValidationError("UnreachedSlope", "slope (" + std::to_string(mu.x) + "," +
                                                    std::to_string(mu.y) + ") not in table");
    return it->second;
}

SurfaceTensionTable surface_tension_table(const TorusGraph& graph) {
    SurfaceTensionTable table;
    table.k = graph.k;
    table.ell = graph.ell;
    table.covers = enumerate_covers(graph);
    for (int c = 0; c < static_cast<int>(table.covers.size()); ++c) {
        const DimerCover& cover = table.covers[c];
        auto it = table.entries.find(cover.mu);
        if (it == table.entries.end()) {
            table.entries.emplace(cover.mu, TensionEntry{cover.energy, {c}, 1});
            continue;
        }
        TensionEntry& entry = it->second;
        ++entry.n_covers;
        if (cover.energy > entry.estar) {
            entry.estar = cover.energy;
            entry.maximizers = {c};
        } else if (cover.energy == entry.estar) {
            entry.maximizers.push_back(c);
        }
    }
    for (long m1 = -graph.ell; m1 <= 0; ++m1)
        for (long m2 = 0; m2 <= graph.k; ++m2)
            if (!table.entries.count(Vec2I{m1, m2}))
                throw ValidationError("UnreachedSlope",
                                      "no dimer cover attains slope (" + std::to_string(m1) +
                                          "," + std::to_string(m2) + ")");
    return table;
}

bool MaximizerGraph::contains(const EdgeRef& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

MaximizerGraph maximizer_graph(const SurfaceTensionTable& table, const TorusGraph& graph,
                               const Vec2I& mu) {
    const TensionEntry& entry = table.at(mu);
    MaximizerGraph mg;
    mg.mu = mu;
    for (int c : entry.maximizers)
        for (const EdgeRef& e : table.covers[c].edges) mg.edges.push_back(e);
    std::sort(mg.edges.begin(), mg.edges.end());
    mg.edges.erase(std::unique(mg.edges.begin(), mg.edges.end()), mg.edges.end());

    // Lift-component analysis: BFS on the quotient with copy-offset tracking.
    // A component is unbounded iff some cycle carries nonzero homology, i.e.
    // a non-tree edge closes with inconsistent offsets.
    int nv = graph.n_vertices();
    auto vid = [&](bool white, int cell) { return white ? cell : nv + cell; };
    std::vector<std::vector<std::pair<int, EdgeRef>>> adj(2 * nv); // (other vid, edge)
    for (const EdgeRef& e : mg.edges) {
        const TorusEdge& te = graph.edge(e);
        adj[vid(true, te.white)].push_back({vid(false, te.black), e});
        adj[vid(false, te.black)].push_back({vid(true, te.white), e});
    }
    std::vector<int> comp(2 * nv, -1);
    std::vector<std::pair<long, long>> offset(2 * nv);
    int n_comp = 0;
    for (int root = 0; root < 2 * nv; ++root) {
        if (comp[root] != -1 || adj[root].empty()) continue;
        int cid = n_comp++;
        LiftComponent lc;
        std::queue<int> bfs;
        comp[root] = cid;
        offset[root] = {0, 0};
        bfs.push(root);
        std::vector<int> members;
        std::vector<EdgeRef> comp_edges;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            members.push_back(v);
            for (auto& [u, e] : adj[v]) {
                const TorusEdge& te = graph.edge(e);
                auto [dm, dn] = graph.black_copy_shift(e);
                bool v_is_white = v < nv;
                // Offset of the far endpoint implied by this edge.
                long om = offset[v].first + (v_is_white ? dm : -dm);
                long on = offset[v].second + (v_is_white ? dn : -dn);
                if (comp[u] == -1) {
                    comp[u] = cid;
                    offset[u] = {om, on};
                    bfs.push(u);
                    (void)te;
                } else if (offset[u] != std::make_pair(om, on)) {
                    lc.bounded = false;
                }
            }
        }
        if (lc.bounded) {
            for (int v : members) {
                LiftComponent::Vtx vt;
                vt.white = v < nv;
                int cell = vt.white ? v : v - nv;
                vt.i = cell / graph.k;
                vt.j = cell % graph.k;
                vt.m = offset[v].first;
                vt.n = offset[v].second;
                lc.vertices.push_back(vt);
            }
            std::sort(lc.vertices.begin(), lc.vertices.end());
            for (const EdgeRef& e : mg.edges) {
                const TorusEdge& te = graph.edge(e);
                if (comp[vid(true, te.white)] == cid)
                    lc.edges.push_back(LiftedEdge{e, offset[vid(true, te.white)].first,
                                                  offset[vid(true, te.white)].second});
            }
            std::sort(lc.edges.begin(), lc.edges.end());
        } else {
            mg.all_bounded = false;
        }
        mg.components.push_back(std::move(lc));
    }
    return mg;
}

bool is_strictly_concave(const SurfaceTensionTable& table, const Subdivision& sub,
                         const Vec2I& mu) {
    table.at(mu); // slope must exist
    return sub.is_vertex(mu);
}

namespace {

// Torus faces: 2*k*ell of them. Even faces F_ee(a,b) sit at plane centers
// (2a, 2b); odd faces F_oo(a,b) at (2a+1, 2b+1); a mod ell, b mod k.
struct FaceIds {
    int k, ell;
    int ee(int a, int b) const { return ((a % ell + ell) % ell) * k + ((b % k + k) % k); }
    int oo(int a, int b) const { return k * ell + ee(a, b); }
    int total() const { return 2 * k * ell; }
};

// The black-left crossing for edge (a, b, type): h(to) = h(from) + multiplicity.
struct Crossing {
    int from, to;
};

Crossing black_left_crossing(const FaceIds& f, const EdgeRef& e) {
    int a = e.i, b = e.j;
    switch (e.type) {
        case EdgeType::West: return {f.oo(a, b), f.ee(a, b + 1)};
        case EdgeType::South: return {f.ee(a, b + 1), f.oo(a, b + 1)};
        case EdgeType::East: return {f.oo(a, b + 1), f.ee(a + 1, b + 1)};
        case EdgeType::North: return {f.ee(a + 1, b + 1), f.oo(a, b)};
    }
    return {0, 0};
}

} // namespace

std::vector<DimerCover> color_multiweb(const std::vector<DimerCover>& input,
                                       const TorusGraph& graph) {
    if (input.empty())
        throw ValidationError("SlopeSumMismatch", "no input covers");
    long d = static_cast<long>(input.size());
    Vec2I total{0, 0};
    std::map<EdgeRef, long> multiplicity;
    for (const DimerCover& cover : input) {
        auto [mu, energy] = slope_and_energy(cover.edges, graph);
        (void)energy;
        total = total + mu;
        for (const EdgeRef& e : cover.edges) ++multiplicity[e];
    }
    if (total.x % d != 0 || total.y % d != 0)
        throw ValidationError("SlopeSumMismatch",
                              "slope sum (" + std::to_string(total.x) + "," +
                                  std::to_string(total.y) + ") not divisible by d=" +
                                  std::to_string(d));
    Vec2I mu{total.x / d, total.y / d};

    FaceIds faces{graph.k, graph.ell};
    std::vector<long> h(faces.total(), -1);
    // f0 is the face adjacent to b_{ell-1,0} and b_{0,0}.
    int f0 = faces.oo(graph.ell - 1, 0);
    h[f0] = 0;
    std::queue<int> bfs;
    bfs.push(f0);
    // Every lattice edge (multiplicity possibly 0) is a constraint mod d.
    std::vector<std::vector<std::pair<int, long>>> cadj(faces.total()); // (face, +mult signed)
    for (int i = 0; i < graph.ell; ++i)
        for (int j = 0; j < graph.k; ++j)
            for (EdgeType t : kEdgeTypes) {
                EdgeRef e{i, j, t};
                long n = 0;
                if (auto it = multiplicity.find(e); it != multiplicity.end()) n = it->second;
                Crossing c = black_left_crossing(faces, e);
                cadj[c.from].push_back({c.to, n});
                cadj[c.to].push_back({c.from, -n});
            }
    while (!bfs.empty()) {
        int f = bfs.front();
        bfs.pop();
        for (auto& [g, n] : cadj[f]) {
            long hv = ((h[f] + n) % d + d) % d;
            if (h[g] == -1) {
                h[g] = hv;
                bfs.push(g);
            } else if (h[g] != hv) {
                throw ValidationError("HeightInconsistency",
                                      "face height function is not well-defined");
            }
        }
    }

    int nv = graph.n_vertices();
    std::vector<std::vector<EdgeRef>> colored(d);
    for (auto& [e, n] : multiplicity) {
        Crossing c = black_left_crossing(faces, e);
        for (long t = 1; t <= n; ++t) {
            long color = (h[c.from] + t) % d;
            colored[color].push_back(e);
        }
    }
    std::vector<DimerCover> out;
    for (long c = 0; c < d; ++c) {
        std::vector<EdgeRef> by_white(nv);
        std::vector<int> deg(nv, 0);
        for (const EdgeRef& e : colored[c]) {
            int w = graph.edge(e).white;
            ++deg[w];
            by_white[w] = e;
        }
        for (int w = 0; w < nv; ++w)
            if (deg[w] != 1)
                throw ValidationError("HeightInconsistency", "colored class is not a matching");
        auto [cmu, energy] = slope_and_energy(by_white, graph); // also validates blacks
        if (cmu != mu)
            throw ValidationError("HeightInconsistency", "colored cover has wrong slope");
        out.push_back(DimerCover{by_white, cmu, energy});
    }
    return out;
}

} // namespace tropaz
