#include "graph_ops.hpp"

#include <deque>
#include <functional>

namespace crit {

std::vector<std::set<int>> components_after_removal(const Multigraph& g,
                                                    const std::set<int>& removed) {
    std::set<int> seen(removed.begin(), removed.end());
    std::vector<std::set<int>> out;
    for (int s : g.vertex_set()) {
        if (seen.count(s)) continue;
        std::set<int> comp;
        std::deque<int> q{s};
        seen.insert(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.insert(v);
            for (int w : g.neighbours(v))
                if (!seen.count(w)) {
                    seen.insert(w);
                    q.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::set<int>> components(const Multigraph& g) {
    return components_after_removal(g, {});
}

bool is_connected(const Multigraph& g) {
    return g.n() <= 1 || components(g).size() == 1;
}

ConnectivityResult vertex_connectivity(const Multigraph& g, int cap) {
    ConnectivityResult r;
    r.exceeds_cap = false;
    int n = g.n();
    if (n == 0 || !is_connected(g)) {
        r.value = 0;
        CutWitness w;
        w.kind = CutWitness::Kind::Component;
        auto comps = components(g);
        if (!comps.empty()) w.side.assign(comps[0].begin(), comps[0].end());
        r.witness = w;
        return r;
    }
    auto vs = g.vertices();
    // try all cuts of size k = 1..min(cap, n-2)
    for (int k = 1; k <= cap && k <= n - 2; ++k) {
        std::vector<int> pick(k);
        std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
            if (depth == k) {
                std::set<int> cut(pick.begin(), pick.end());
                auto comps = components_after_removal(g, cut);
                if (comps.size() >= 2) {
                    CutWitness w;
                    w.kind = CutWitness::Kind::VertexCut;
                    w.vertices = pick;
                    w.side.assign(comps[0].begin(), comps[0].end());
                    r.witness = w;
                    return true;
                }
                return false;
            }
            for (int i = start; i < (int)vs.size(); ++i) {
                pick[depth] = vs[i];
                if (rec(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) {
            r.value = k;
            return r;
        }
    }
    // no separating set of size <= cap; kappa(K_n) = n-1 convention
    if (n - 1 <= cap) {
        r.value = n - 1;
        return r;
    }
    r.value = cap + 1;
    r.exceeds_cap = true;
    return r;
}

bool is_peripherally_4_connected(const Multigraph& g, CutWitness* fail) {
    auto conn = vertex_connectivity(g, 3);
    if (conn.value < 3) {
        if (fail && conn.witness) *fail = *conn.witness;
        return false;
    }
    auto vs = g.vertices();
    int n = (int)vs.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::set<int> cut{vs[i], vs[j], vs[k]};
                auto comps = components_after_removal(g, cut);
                if (comps.size() < 2) continue;
                // legal shapes: two components with one a singleton, or
                // three singleton components
                bool ok;
                if (comps.size() == 2)
                    ok = comps[0].size() == 1 || comps[1].size() == 1;
                else if (comps.size() == 3)
                    ok = comps[0].size() == 1 && comps[1].size() == 1 &&
                         comps[2].size() == 1;
                else
                    ok = false;
                if (!ok) {
                    if (fail) {
                        fail->kind = CutWitness::Kind::ThreeCutPartition;
                        fail->vertices = {vs[i], vs[j], vs[k]};
                        // one side of a violating partition: the largest component
                        auto& big = *std::max_element(
                            comps.begin(), comps.end(),
                            [](auto& a, auto& b) { return a.size() < b.size(); });
                        fail->side.assign(big.begin(), big.end());
                    }
                    return false;
                }
            }
    return true;
}

bool is_internally_4_connected(const Multigraph& g, CutWitness* fail) {
    if (!is_peripherally_4_connected(g, fail)) return false;
    auto hugs = find_hugs(g);
    if (!hugs.empty()) {
        if (fail) {
            fail->kind = CutWitness::Kind::Hug;
            fail->edges = {hugs[0].edge};
            fail->vertices = {hugs[0].head};
        }
        return false;
    }
    return true;
}

Multigraph suppress_degree_two(const Multigraph& g) {
    // reject cycle components up front
    for (auto& comp : components(g)) {
        bool all2 = !comp.empty();
        for (int v : comp)
            if (g.degree(v) != 2) {
                all2 = false;
                break;
            }
        if (all2) throw std::invalid_argument("suppress: cycle component");
    }
    Multigraph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : h.vertices()) {
            if (h.degree(v) != 2) continue;
            auto nb = h.neighbours(v);
            if (nb.size() == 1)
                throw std::invalid_argument("suppress: would create self-loop");
            int a = nb[0], b = nb[1];
            std::string ta = h.edge_tag(a, v), tb = h.edge_tag(v, b);
            h.remove_vertex(v);
            h.add_edge(a, b);
            if (!ta.empty() && ta == tb) h.set_edge_tag(a, b, ta);
            changed = true;
            break;  // ascending id order: restart scan
        }
    }
    return h;
}

Multigraph contract_set(const Multigraph& g, const std::set<int>& s) {
    if (s.empty()) throw std::invalid_argument("contract: empty set");
    for (int v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("contract: unknown vertex");
    {
        Multigraph sub = g.induced(s);
        if (!is_connected(sub)) throw std::invalid_argument("contract: set not connected");
    }
    int target = *s.begin();
    Multigraph h;
    for (int v : g.vertex_set())
        if (!s.count(v)) h.add_vertex(v);
    h.add_vertex(target);
    for (auto [u, v, m] : g.edge_classes()) {
        int uu = s.count(u) ? target : u;
        int vv = s.count(v) ? target : v;
        if (uu == vv) continue;  // self-loop discarded
        h.add_edge(uu, vv, m);
    }
    return h;
}

std::vector<Hug> find_hugs(const Multigraph& g) {
    std::vector<Hug> out;
    // collect raw hugs: edge uv in a triangle uvh with h of neighbour-degree 3
    std::vector<Hug> raw;
    for (auto [u, v, m] : g.edge_classes()) {
        for (int h : g.neighbours(u)) {
            if (h == v || !g.has_edge(h, v)) continue;
            if ((int)g.neighbours(h).size() != 3) continue;
            Hug hg;
            hg.edge = {u, v};
            hg.head = h;
            hg.kind = Hug::Kind::Deletable;
            raw.push_back(hg);
        }
    }
    // bear hug: hug e=uw with head v; some end u of e carries a second hug
    // uy with head t != v, and N(u) is contained in {t,v,w} union N(t)
    auto is_hug_with_head = [&](int u, int y, int t) {
        return g.has_edge(u, y) && g.has_edge(t, u) && g.has_edge(t, y) &&
               (int)g.neighbours(t).size() == 3;
    };
    // bear witness: hug (u,w,head v) is protected at end u via the hug (u,y,head t)
    auto bear_via = [&](int u, int w, int v, int y, int t) {
        if (t == v || y == w || y == v || t == y || t == w) return false;
        if (!is_hug_with_head(u, y, t)) return false;
        std::set<int> allowed{t, v, w};
        for (int z : g.neighbours(t)) allowed.insert(z);
        for (int z : g.neighbours(u))
            if (!allowed.count(z)) return false;
        return true;
    };
    for (auto& hg : raw) {
        int v = hg.head;
        for (int pass = 0; pass < 2 && hg.kind == Hug::Kind::Deletable; ++pass) {
            int u = pass == 0 ? hg.edge.first : hg.edge.second;
            int w = pass == 0 ? hg.edge.second : hg.edge.first;
            for (int y : g.neighbours(u)) {
                for (int t : g.neighbours(u)) {
                    if (bear_via(u, w, v, y, t)) {
                        hg.kind = Hug::Kind::Bear;
                        break;
                    }
                }
                if (hg.kind == Hug::Kind::Bear) break;
            }
        }
    }
    // simultaneously deletable pair: bear hugs ux, uy protecting each other at
    // the common end u (so deleting both leaves u with just two neighbours)
    for (size_t i = 0; i < raw.size(); ++i) {
        for (size_t j = i + 1; j < raw.size(); ++j) {
            if (raw[i].kind != Hug::Kind::Bear || raw[j].kind != Hug::Kind::Bear)
                continue;
            auto& a = raw[i].edge;
            auto& b = raw[j].edge;
            if (a == b) continue;
            for (int u : {a.first, a.second}) {
                if (b.first != u && b.second != u) continue;
                int x = a.first == u ? a.second : a.first;
                int y = b.first == u ? b.second : b.first;
                if (bear_via(u, x, raw[i].head, y, raw[j].head) &&
                    bear_via(u, y, raw[j].head, x, raw[i].head)) {
                    Hug pair = raw[i];
                    pair.kind = Hug::Kind::SimultaneousPair;
                    pair.partner = raw[j].edge;
                    out.push_back(pair);
                    break;
                }
            }
        }
    }
    for (auto& hg : raw) out.push_back(hg);
    return out;
}

}  // namespace crit
