#include "planarity.hpp"

#include <functional>

#include "graph_ops.hpp"

namespace crit {

namespace {

// ---- blocks (Hopcroft–Tarjan) on the underlying simple graph ----

struct BlockFinder {
    const Multigraph& g;
    std::map<int, int> num, low;
    int counter = 0;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::set<int>> out;

    explicit BlockFinder(const Multigraph& gg) : g(gg) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = ++counter;
        for (int w : g.neighbours(v)) {
            if (!num.count(w)) {
                stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::set<int> blk;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        blk.insert(e.first);
                        blk.insert(e.second);
                        if (e == std::make_pair(v, w)) break;
                    }
                    out.push_back(blk);
                }
            } else if (w != parent && num[w] < num[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
};

// ---- Demoucron's planarity algorithm on a biconnected simple graph ----

// Faces are vertex cycles.  H is the embedded subgraph (edge set).  Fragments
// (H-bridges) are embedded one path at a time.
struct Demoucron {
    int n;
    std::vector<std::vector<char>> adj;   // simple adjacency of the block
    std::vector<std::vector<char>> emb;   // embedded edges
    std::vector<std::vector<int>> faces;  // vertex cycles
    std::vector<char> inH;

    bool planar(const Multigraph& block, const std::vector<int>& ids) {
        n = (int)ids.size();
        std::map<int, int> idx;
        for (int i = 0; i < n; ++i) idx[ids[i]] = i;
        adj.assign(n, std::vector<char>(n, 0));
        int m = 0;
        for (auto [u, v, mm] : block.edge_classes()) {
            if (!idx.count(u) || !idx.count(v)) continue;
            adj[idx[u]][idx[v]] = adj[idx[v]][idx[u]] = 1;
            ++m;
        }
        if (n <= 4) return true;
        if (m > 3 * n - 6) return false;

        emb.assign(n, std::vector<char>(n, 0));
        inH.assign(n, 0);
        // initial cycle
        std::vector<int> cyc = find_cycle();
        if (cyc.empty()) return true;  // a tree block cannot happen (biconnected, m>=n)
        faces.clear();
        faces.push_back(cyc);
        faces.push_back(cyc);
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            emb[a][b] = emb[b][a] = 1;
            inH[a] = inH[b] = 1;
        }
        while (true) {
            auto frags = fragments();
            if (frags.empty()) return true;
            // admissible faces per fragment
            int pick = -1;
            std::vector<int> pick_faces;
            for (size_t fi = 0; fi < frags.size(); ++fi) {
                std::vector<int> adm;
                for (size_t f = 0; f < faces.size(); ++f) {
                    std::set<int> fv(faces[f].begin(), faces[f].end());
                    bool ok = true;
                    for (int a : frags[fi].atts)
                        if (!fv.count(a)) {
                            ok = false;
                            break;
                        }
                    if (ok) adm.push_back((int)f);
                }
                if (adm.empty()) return false;
                if (adm.size() == 1) {
                    pick = (int)fi;
                    pick_faces = adm;
                    break;
                }
                if (pick < 0) {
                    pick = (int)fi;
                    pick_faces = adm;
                }
            }
            embed_path(frags[pick], pick_faces[0]);
        }
    }

    struct Fragment {
        std::set<int> verts;  // interior vertices (not in H)
        std::set<int> atts;   // attachments in H
        std::pair<int, int> chord{-1, -1};
    };

    std::vector<Fragment> fragments() {
        std::vector<Fragment> out;
        // chords: unembedded edges between H-vertices
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u][v] && !emb[u][v] && inH[u] && inH[v]) {
                    Fragment f;
                    f.atts = {u, v};
                    f.chord = {u, v};
                    out.push_back(f);
                }
        // components of G - V(H) with their attachments
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (inH[s] || seen[s]) continue;
            Fragment f;
            std::vector<int> q{s};
            seen[s] = 1;
            while (!q.empty()) {
                int v = q.back();
                q.pop_back();
                f.verts.insert(v);
                for (int w = 0; w < n; ++w) {
                    if (!adj[v][w]) continue;
                    if (inH[w])
                        f.atts.insert(w);
                    else if (!seen[w]) {
                        seen[w] = 1;
                        q.push_back(w);
                    }
                }
            }
            out.push_back(f);
        }
        return out;
    }

    void embed_path(const Fragment& f, int face) {
        std::vector<int> path;  // alpha path between two attachments
        if (f.chord.first >= 0) {
            path = {f.chord.first, f.chord.second};
        } else {
            // BFS from one attachment through fragment interior to another
            int a0 = *f.atts.begin();
            std::map<int, int> prev;
            std::vector<int> q;
            for (int v : f.verts)
                if (adj[a0][v]) {
                    prev[v] = a0;
                    q.push_back(v);
                }
            int hit = -1, hit_att = -1;
            for (size_t qi = 0; qi < q.size() && hit < 0; ++qi) {
                int v = q[qi];
                for (int w = 0; w < n; ++w) {
                    if (!adj[v][w]) continue;
                    if (inH[w] && w != a0) {
                        hit = v;
                        hit_att = w;
                        break;
                    }
                    if (!inH[w] && f.verts.count(w) && !prev.count(w)) {
                        prev[w] = v;
                        q.push_back(w);
                    }
                }
            }
            path.push_back(hit_att);
            int cur = hit;
            while (cur != a0) {
                path.push_back(cur);
                cur = prev[cur];
            }
            path.push_back(a0);
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            emb[path[i]][path[i + 1]] = emb[path[i + 1]][path[i]] = 1;
            inH[path[i]] = inH[path[i + 1]] = 1;
        }
        // split the face along path
        std::vector<int>& fc = faces[face];
        int u = path.front(), v = path.back();
        int pu = -1, pv = -1;
        for (size_t i = 0; i < fc.size(); ++i) {
            if (fc[i] == u) pu = (int)i;
            if (fc[i] == v) pv = (int)i;
        }
        std::vector<int> f1, f2;
        // walk pu -> pv forwards
        for (int i = pu; i != pv; i = (i + 1) % (int)fc.size()) f1.push_back(fc[i]);
        f1.push_back(fc[pv]);
        for (size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
        // walk pv -> pu forwards
        for (int i = pv; i != pu; i = (i + 1) % (int)fc.size()) f2.push_back(fc[i]);
        f2.push_back(fc[pu]);
        for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
        faces[face] = f1;
        faces.push_back(f2);
    }

    std::vector<int> find_cycle() {
        std::vector<int> parent(n, -2), result;
        std::function<bool(int, int)> dfs = [&](int v, int p) -> bool {
            for (int w = 0; w < n; ++w) {
                if (!adj[v][w] || w == p) continue;
                if (parent[w] != -2) {
                    // back edge to an ancestor: walk up from v to w
                    std::vector<int> path;
                    int cur = v;
                    while (cur != -1 && cur != w) {
                        path.push_back(cur);
                        cur = parent[cur];
                    }
                    if (cur == w) {
                        path.push_back(w);
                        result = path;
                        return true;
                    }
                    continue;
                }
                parent[w] = v;
                if (dfs(w, v)) return true;
            }
            return false;
        };
        for (int s = 0; s < n; ++s) {
            if (parent[s] != -2) continue;
            parent[s] = -1;
            if (dfs(s, -1)) return result;
        }
        return {};
    }
};

bool planar_simple(const Multigraph& g) {
    if (g.n() <= 4) return true;
    for (auto& blk : blocks(g)) {
        if (blk.size() <= 2) continue;
        Multigraph sub = g.induced(blk);
        std::vector<int> ids(blk.begin(), blk.end());
        Demoucron dm;
        if (!dm.planar(sub, ids)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::set<int>> blocks(const Multigraph& g) {
    BlockFinder bf(g);
    for (int v : g.vertex_set())
        if (!bf.num.count(v)) bf.dfs(v, -1);
    // isolated vertices form their own trivial blocks
    for (int v : g.vertex_set())
        if (g.simple_degree(v) == 0) bf.out.push_back({v});
    return bf.out;
}

bool is_planar(const Multigraph& g) { return planar_simple(g.underlying_simple()); }

bool is_planar_witness(const Multigraph& g, std::optional<KuratowskiWitness>* w) {
    Multigraph s = g.underlying_simple();
    if (planar_simple(s)) {
        if (w) w->reset();
        return true;
    }
    if (w) {
        // minimalise by edge deletion: what remains is a Kuratowski subdivision
        Multigraph k = s;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [u, v, m] : k.edge_classes()) {
                Multigraph t = k;
                t.remove_edge_all(u, v);
                if (!planar_simple(t)) {
                    k = t;
                    changed = true;
                    break;
                }
            }
        }
        for (int v : k.vertices())
            if (k.degree(v) == 0) k.remove_vertex(v);
        KuratowskiWitness kw;
        kw.subdivision = k;
        Multigraph branch = suppress_degree_two(k);
        kw.is_k5 = branch.n() == 5;
        *w = kw;
    }
    return false;
}

}  // namespace crit
