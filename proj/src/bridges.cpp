#include "bridges.hpp"

#include <functional>

namespace crit {

BridgeDecomposition bridges(const Multigraph& g, const Multigraph& h,
                            const std::vector<int>* cycle) {
    for (int v : h.vertex_set())
        if (!g.has_vertex(v)) throw std::invalid_argument("h not a subgraph of g");
    for (auto [u, v, m] : h.edge_classes())
        if (g.edge_mult(u, v) < m) throw std::invalid_argument("h not a subgraph of g");

    BridgeDecomposition out;
    // edge-bridges: copies of g-edges between h-vertices beyond h's multiplicity
    for (auto [u, v, m] : g.edge_classes()) {
        if (!h.has_vertex(u) || !h.has_vertex(v)) continue;
        int extra = m - h.edge_mult(u, v);
        for (int i = 0; i < extra; ++i) {
            HBridge b;
            b.attachments = {u, v};
            b.edges = {{u, v}};
            out.bridges.push_back(b);
        }
    }
    // component bridges
    std::set<int> hv(h.vertex_set().begin(), h.vertex_set().end());
    std::set<int> seen;
    for (int s : g.vertex_set()) {
        if (hv.count(s) || seen.count(s)) continue;
        HBridge b;
        std::vector<int> q{s};
        seen.insert(s);
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            b.nucleus.insert(v);
            for (int w : g.neighbours(v)) {
                if (hv.count(w)) {
                    b.attachments.insert(w);
                    for (int c = 0; c < g.edge_mult(v, w); ++c) b.edges.push_back({v, w});
                } else if (!seen.count(w)) {
                    seen.insert(w);
                    q.push_back(w);
                }
            }
        }
        for (int v : b.nucleus)
            for (int w : b.nucleus)
                if (v < w)
                    for (int c = 0; c < g.edge_mult(v, w); ++c) b.edges.push_back({v, w});
        out.bridges.push_back(b);
    }

    if (cycle) {
        auto& C = *cycle;
        int L = (int)C.size();
        std::map<int, int> pos;
        for (int i = 0; i < L; ++i) pos[C[i]] = i;
        for (auto& b : out.bridges) {
            std::vector<std::vector<int>> arcs;
            std::vector<int> att;
            for (int a : b.attachments)
                if (pos.count(a)) att.push_back(a);
            std::sort(att.begin(), att.end(),
                      [&](int x, int y) { return pos[x] < pos[y]; });
            if (att.size() >= 2) {
                for (size_t i = 0; i < att.size(); ++i) {
                    int from = pos[att[i]];
                    int to = pos[att[(i + 1) % att.size()]];
                    std::vector<int> arc;
                    for (int p = from; p != to; p = (p + 1) % L) arc.push_back(C[p]);
                    arc.push_back(C[to]);
                    arcs.push_back(arc);
                }
            } else if (att.size() == 1) {
                std::vector<int> arc;
                int from = pos[att[0]];
                for (int p = from, i = 0; i <= L; p = (p + 1) % L, ++i) arc.push_back(C[p]);
                arcs.push_back(arc);
            }
            out.residual_arcs.push_back(arcs);
        }
    }
    return out;
}

namespace {

// skew test: attachments u,v of B and u',v' of B', all distinct, occurring
// in the cyclic order u,u',v,v'
bool skew(const std::vector<int>& posA, const std::vector<int>& posB, int L) {
    for (int u : posA)
        for (int v : posA) {
            if (u == v) continue;
            for (int up : posB)
                for (int vp : posB) {
                    if (up == vp) continue;
                    if (u == up || u == vp || v == up || v == vp) continue;
                    // is the cyclic order u, up, v, vp?
                    auto between = [&](int a, int b, int x) {
                        // x strictly between a and b going forward
                        int d1 = (b - a + L) % L, dx = (x - a + L) % L;
                        return dx > 0 && dx < d1;
                    };
                    if (between(u, v, up) && between(v, u, vp)) return true;
                }
        }
    return false;
}

}  // namespace

OverlapDiagram overlap_diagram(const Multigraph& g, const std::vector<int>& cycle) {
    // validity of the cycle
    int L = (int)cycle.size();
    if (L < 2) throw std::invalid_argument("cycle too short");
    for (int i = 0; i < L; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % L]))
            throw std::invalid_argument("not a cycle of g");
    Multigraph h;
    for (int i = 0; i < L; ++i) h.add_edge(cycle[i], cycle[(i + 1) % L]);

    auto dec = bridges(g, h, &cycle);
    std::map<int, int> pos;
    for (int i = 0; i < L; ++i) pos[cycle[i]] = i;

    OverlapDiagram od;
    od.num_bridges = (int)dec.bridges.size();
    for (int i = 0; i < od.num_bridges; ++i)
        for (int j = i + 1; j < od.num_bridges; ++j) {
            auto& A = dec.bridges[i];
            auto& B = dec.bridges[j];
            if (A.attachments.size() == 3 && A.attachments == B.attachments) {
                od.edges.emplace_back(i, j, OverlapKind::ThreeEquivalent);
                continue;
            }
            std::vector<int> pa, pb;
            for (int a : A.attachments) pa.push_back(pos.at(a));
            for (int b : B.attachments) pb.push_back(pos.at(b));
            if (skew(pa, pb, L)) od.edges.emplace_back(i, j, OverlapKind::Skew);
        }
    // bipartiteness
    od.colour.assign(od.num_bridges, -1);
    std::vector<std::vector<int>> adj(od.num_bridges);
    for (auto& [a, b, k] : od.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    od.bipartite = true;
    std::vector<int> parent(od.num_bridges, -1);
    for (int s = 0; s < od.num_bridges && od.bipartite; ++s) {
        if (od.colour[s] >= 0) continue;
        od.colour[s] = 0;
        std::vector<int> q{s};
        for (size_t qi = 0; qi < q.size() && od.bipartite; ++qi) {
            int v = q[qi];
            for (int w : adj[v]) {
                if (od.colour[w] < 0) {
                    od.colour[w] = 1 - od.colour[v];
                    parent[w] = v;
                    q.push_back(w);
                } else if (od.colour[w] == od.colour[v]) {
                    // odd cycle: walk both to root, then join
                    std::vector<int> pv, pw;
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                    std::set<int> onv(pv.begin(), pv.end());
                    int meet = -1;
                    for (int x : pw)
                        if (onv.count(x)) {
                            meet = x;
                            break;
                        }
                    od.odd_cycle.clear();
                    for (int x : pv) {
                        od.odd_cycle.push_back(x);
                        if (x == meet) break;
                    }
                    std::vector<int> tail;
                    for (int x : pw) {
                        if (x == meet) break;
                        tail.push_back(x);
                    }
                    std::reverse(tail.begin(), tail.end());
                    for (int x : tail) od.odd_cycle.push_back(x);
                    od.bipartite = false;
                    break;
                }
            }
        }
    }
    if (!od.bipartite) od.colour.clear();
    return od;
}

std::vector<std::vector<int>> all_cycles(const Multigraph& gm) {
    Multigraph g = gm.underlying_simple();
    std::vector<std::vector<int>> out;
    auto vs = g.vertices();
    for (int root : vs) {
        // simple paths from root using vertices > root, closing at root
        std::vector<int> path{root};
        std::set<int> onpath{root};
        std::function<void()> dfs = [&]() {
            int cur = path.back();
            for (int nb : g.neighbours(cur)) {
                if (nb == root && path.size() >= 3) {
                    if (path[1] < path.back()) out.push_back(path);
                } else if (nb > root && !onpath.count(nb)) {
                    path.push_back(nb);
                    onpath.insert(nb);
                    dfs();
                    onpath.erase(nb);
                    path.pop_back();
                }
            }
        };
        dfs();
    }
    // digon cycles of the multigraph
    for (auto [u, v, m] : gm.edge_classes())
        if (m >= 2) out.push_back({u, v});
    return out;
}

bool tutte_planarity(const Multigraph& g) {
    // forests are planar; Thm 4.5(2) is vacuously satisfied by them as well
    for (auto& cyc : all_cycles(g.underlying_simple())) {
        auto od = overlap_diagram(g.underlying_simple(), cyc);
        if (!od.bipartite) return false;
    }
    return true;
}

}  // namespace crit
