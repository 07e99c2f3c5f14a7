#include "cleavage.hpp"

#include <functional>

#include "canonical.hpp"
#include "graph_ops.hpp"
#include "named_graphs.hpp"
#include "planarity.hpp"

namespace crit {

namespace {

struct VEdge {
    int u, v, link;
};

struct Splitter {
    CleavageDecomposition out;
    int next_link = 0;

    // bridges of ||{u,v}||: first the parallel copies of uv, then components
    struct UVBridge {
        std::set<int> nucleus;
        int edge_copies = 0;  // for the uv parallel class pseudo-bridges
    };

    void decompose(Multigraph g, std::vector<VEdge> virt) {
        // find a hinge with a legal separation
        auto vs = g.vertices();
        for (size_t i = 0; i < vs.size(); ++i) {
            for (size_t j = i + 1; j < vs.size(); ++j) {
                int u = vs[i], v = vs[j];
                auto comps = components_after_removal(g, {u, v});
                int uvmult = g.edge_mult(u, v);
                int r = (int)comps.size() + uvmult;
                if (r < 2) continue;
                // legal split: one side a bridge with >= 2 edges, rest >= 2 edges
                // r >= 3, not all single edges: split off one multi-edge bridge
                if (r >= 3 && !comps.empty()) {
                    // choose H = a component bridge with >= 2 edges
                    int pick = -1;
                    for (size_t c = 0; c < comps.size(); ++c) {
                        int edges = bridge_edge_count(g, comps[c], u, v);
                        if (edges >= 2) {
                            pick = (int)c;
                            break;
                        }
                    }
                    if (pick >= 0) {
                        split(g, virt, u, v, comps, pick);
                        return;
                    }
                } else if (r == 2 && comps.size() == 2) {
                    // two component bridges; hinge iff one is 2-connected
                    bool ok = false;
                    for (int c = 0; c < 2; ++c)
                        if (bridge_two_connected(g, comps[c], u, v)) ok = true;
                    if (ok && bridge_edge_count(g, comps[0], u, v) >= 2 &&
                        bridge_edge_count(g, comps[1], u, v) >= 2) {
                        split(g, virt, u, v, comps, 0);
                        return;
                    }
                }
            }
        }
        // no hinge: g is a cleavage unit
        CleavageUnit unit;
        unit.graph = g;
        for (auto& ve : virt) {
            unit.virtual_edges.push_back({ve.u, ve.v});
            unit.link_ids.push_back(ve.link);
        }
        if (g.n() == 2)
            unit.kind = g.m_total() >= 4 ? CleavageUnit::Kind::Bond
                                         : CleavageUnit::Kind::ThreeConnected;
        else {
            bool cycle = true;
            for (int w : g.vertex_set())
                if (g.degree(w) != 2) cycle = false;
            if (cycle && g.n() >= 4)
                unit.kind = CleavageUnit::Kind::Cycle;
            else
                unit.kind = CleavageUnit::Kind::ThreeConnected;
        }
        int idx = (int)out.units.size();
        out.units.push_back(unit);
        for (int l : unit.link_ids) {
            auto it = out.links.find(l);
            if (it == out.links.end())
                out.links[l] = {idx, -1};
            else
                it->second.second = idx;
        }
    }

    int bridge_edge_count(const Multigraph& g, const std::set<int>& comp, int u, int v) {
        int edges = 0;
        for (auto [a, b, m] : g.edge_classes())
            if (comp.count(a) || comp.count(b)) edges += m;
        (void)u;
        (void)v;
        return edges;
    }

    bool bridge_two_connected(const Multigraph& g, const std::set<int>& comp, int u,
                              int v) {
        std::set<int> verts = comp;
        verts.insert(u);
        verts.insert(v);
        Multigraph b = g.induced(verts);
        b.remove_edge_all(u, v);  // uv copies are separate bridges
        if (b.n() < 3) return false;
        for (int w : b.vertex_set()) {
            auto comps = components_after_removal(b, {w});
            if (comps.size() > 1) return false;
        }
        return true;
    }

    void split(const Multigraph& g, const std::vector<VEdge>& virt, int u, int v,
               const std::vector<std::set<int>>& comps, int pick) {
        int link = next_link++;
        // H: the picked component bridge + virtual uv
        std::set<int> hv = comps[pick];
        hv.insert(u);
        hv.insert(v);
        Multigraph h = g.induced(hv);
        h.remove_edge_all(u, v);
        h.add_edge(u, v);
        std::vector<VEdge> hvirt{{u, v, link}};
        for (auto& ve : virt)
            if (comps[pick].count(ve.u) || comps[pick].count(ve.v))
                hvirt.push_back(ve);
        // K: everything else + virtual uv
        Multigraph k = g;
        for (int w : comps[pick]) k.remove_vertex(w);
        k.add_edge(u, v);
        std::vector<VEdge> kvirt{{u, v, link}};
        for (auto& ve : virt) {
            bool in_h = comps[pick].count(ve.u) || comps[pick].count(ve.v);
            if (!in_h) kvirt.push_back(ve);
        }
        decompose(h, hvirt);
        decompose(k, kvirt);
    }
};

}  // namespace

CleavageDecomposition cleavage_units(const Multigraph& g) {
    {
        auto c = vertex_connectivity(g, 2);
        if (c.value < 2) throw std::invalid_argument("cleavage_units: not 2-connected");
    }
    Splitter s;
    s.decompose(g, {});
    return s.out;
}

Multigraph glue_units(const CleavageDecomposition& dec) {
    if (dec.units.empty()) return {};
    // BFS over the link tree
    std::vector<bool> placed(dec.units.size(), false);
    Multigraph acc = dec.units[0].graph;
    // map per unit: unit vertex -> accumulated vertex
    std::vector<std::map<int, int>> vmap(dec.units.size());
    for (int v : dec.units[0].graph.vertex_set()) vmap[0][v] = v;
    placed[0] = true;
    // remaining virtual copies in acc are removed as links resolve
    bool progress = true;
    int fresh = acc.fresh_vertex_id();
    while (progress) {
        progress = false;
        for (auto& [link, pair] : dec.links) {
            auto [x, y] = pair;
            if (x < 0 || y < 0) continue;
            if (placed[x] == placed[y]) continue;
            int base = placed[x] ? x : y;
            int add = placed[x] ? y : x;
            // hinge vertices in each unit
            auto find_ve = [&](int unit) -> std::pair<int, int> {
                for (size_t i = 0; i < dec.units[unit].link_ids.size(); ++i)
                    if (dec.units[unit].link_ids[i] == link)
                        return dec.units[unit].virtual_edges[i];
                throw std::logic_error("missing link");
            };
            auto [bu, bv] = find_ve(base);
            auto [au, av] = find_ve(add);
            // map add's vertices: hinge onto base's hinge image, rest fresh
            std::map<int, int> f;
            f[au] = vmap[base][bu];
            f[av] = vmap[base][bv];
            for (int w : dec.units[add].graph.vertex_set())
                if (!f.count(w)) f[w] = fresh++;
            Multigraph g2 = dec.units[add].graph.relabelled(f);
            // drop one virtual copy on each side
            acc.remove_edge_one(vmap[base][bu], vmap[base][bv]);
            g2.remove_edge_one(f[au], f[av]);
            for (int w : g2.vertex_set()) acc.add_vertex(w);
            for (auto [a2, b2, m2] : g2.edge_classes()) acc.add_edge(a2, b2, m2);
            vmap[add] = f;
            placed[add] = true;
            progress = true;
        }
    }
    return acc;
}

namespace {

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph g = a;
    int off = a.fresh_vertex_id();
    for (int v : b.vertex_set()) g.add_vertex(v + off);
    for (auto [u, v, m] : b.edge_classes()) g.add_edge(u + off, v + off, m);
    return g;
}

// glue b onto a by identifying bvertex with avertex
Multigraph one_point_union(const Multigraph& a, int avertex, const Multigraph& b,
                           int bvertex) {
    Multigraph g = a;
    int off = a.fresh_vertex_id();
    std::map<int, int> f;
    for (int v : b.vertex_set()) f[v] = v == bvertex ? avertex : v + off;
    for (int v : b.vertex_set()) g.add_vertex(f[v]);
    for (auto [u, v, m] : b.edge_classes()) g.add_edge(f[u], f[v], m);
    return g;
}

Multigraph subdivide_one_edge(const Multigraph& g, int u, int v, int& mid) {
    Multigraph h = g;
    mid = h.fresh_vertex_id();
    h.remove_edge_one(u, v);
    h.add_edge(u, mid);
    h.add_edge(mid, v);
    return h;
}

// The five unit types of Theorem 14.3, as (content graph, hinge pair,
// ends-distinguishable flag).  Content = unit minus its virtual edge.
struct UnitType {
    Multigraph content;
    int u, v;
    bool asym;
};

std::vector<UnitType> unit_types() {
    std::vector<UnitType> out;
    {
        Multigraph c = complete(5);
        c.remove_edge_all(0, 1);
        out.push_back({c, 0, 1, false});  // K5
    }
    {
        Multigraph c = complete_bipartite(3, 3);
        c.remove_edge_all(0, 3);
        out.push_back({c, 0, 3, false});  // K33
    }
    {
        // K33 plus virtual edge between two same-part vertices
        out.push_back({complete_bipartite(3, 3), 0, 1, false});
    }
    {
        // K33, one edge subdivided; hinge joins the subdivision vertex with a
        // node avoiding the subdivided edge
        int mid;
        Multigraph c = subdivide_one_edge(complete_bipartite(3, 3), 0, 3, mid);
        out.push_back({c, mid, 1, true});
    }
    {
        // K33, two disjoint edges subdivided; hinge joins the two new vertices
        int m1, m2;
        Multigraph c = subdivide_one_edge(complete_bipartite(3, 3), 0, 3, m1);
        c = subdivide_one_edge(c, 1, 4, m2);
        out.push_back({c, m1, m2, false});
    }
    return out;
}

// glue two unit contents on a shared hinge pair {x, y}
Multigraph glue_two(const UnitType& a, const UnitType& b, bool flip_b) {
    Multigraph g = a.content;
    int off = g.fresh_vertex_id();
    int bu = flip_b ? b.v : b.u;
    int bv = flip_b ? b.u : b.v;
    std::map<int, int> f;
    for (int w : b.content.vertex_set())
        f[w] = w == bu ? a.u : (w == bv ? a.v : w + off);
    for (int w : b.content.vertex_set()) g.add_vertex(f[w]);
    for (auto [p, q, m] : b.content.edge_classes()) g.add_edge(f[p], f[q], m);
    return g;
}

// glue with a middle cycle unit: 3-cycle {p,q,r} with virtual pq, pr (real
// edge qr), or 4-cycle {p,q,r,s} with virtual pq, rs (real edges qr, sp).
Multigraph glue_three(const UnitType& a, bool flip_a, const UnitType& b, bool flip_b,
                      bool four_cycle) {
    Multigraph g;
    int p = 0, q = 1, r = 2, s = 3;
    if (four_cycle) {
        g.add_edge(q, r);
        g.add_edge(s, p);
    } else {
        g.add_edge(q, r);
    }
    auto attach = [&](const UnitType& t, bool flip, int hu, int hv) {
        int off = g.fresh_vertex_id();
        int tu = flip ? t.v : t.u;
        int tv = flip ? t.u : t.v;
        std::map<int, int> f;
        for (int w : t.content.vertex_set())
            f[w] = w == tu ? hu : (w == tv ? hv : w + off);
        for (int w : t.content.vertex_set()) g.add_vertex(f[w]);
        for (auto [x, y, m] : t.content.edge_classes()) g.add_edge(f[x], f[y], m);
    };
    if (four_cycle) {
        attach(a, flip_a, p, q);
        attach(b, flip_b, r, s);
    } else {
        attach(a, flip_a, p, q);
        attach(b, flip_b, p, r);
    }
    return g;
}

}  // namespace

std::vector<Multigraph> sporadic_13() {
    std::vector<Multigraph> out;
    Multigraph k5 = complete(5), k33 = complete_bipartite(3, 3);
    // three disconnected examples
    out.push_back(disjoint_union(k5, k5));
    out.push_back(disjoint_union(k5, k33));
    out.push_back(disjoint_union(k33, k33));
    // one-point unions; the identified vertex may subdivide an edge
    auto with_sub = [&](const Multigraph& g) {
        int mid;
        return std::make_pair(g, subdivide_one_edge(g, *g.vertex_set().begin(),
                                                    g.neighbours(*g.vertex_set().begin())[0],
                                                    mid));
    };
    auto node_of = [](const Multigraph& g) { return *g.vertex_set().begin(); };
    auto sub_of = [](const Multigraph& g) { return g.max_vertex_id(); };
    for (auto [b1, b2] : std::vector<std::pair<Multigraph, Multigraph>>{
             {k5, k5}, {k33, k33}, {k5, k33}}) {
        auto [b1n, b1s] = with_sub(b1);
        auto [b2n, b2s] = with_sub(b2);
        bool same = isomorphic(b1, b2);
        out.push_back(one_point_union(b1n, node_of(b1n), b2n, node_of(b2n)));
        out.push_back(one_point_union(b1n, node_of(b1n), b2s, sub_of(b2s)));
        if (!same) out.push_back(one_point_union(b1s, sub_of(b1s), b2n, node_of(b2n)));
        out.push_back(one_point_union(b1s, sub_of(b1s), b2s, sub_of(b2s)));
    }
    return out;
}

std::vector<Multigraph> sporadic_36() {
    std::vector<Multigraph> out;
    auto types = unit_types();
    std::set<std::string> seen;
    auto push = [&](const Multigraph& g) {
        if (seen.insert(canonical_form(g)).second) out.push_back(g);
    };
    // two units
    for (size_t i = 0; i < types.size(); ++i)
        for (size_t j = i; j < types.size(); ++j)
            for (bool flip : {false, true}) {
                push(glue_two(types[i], types[j], flip));
                if (!types[i].asym && !types[j].asym) break;
            }
    // three units: at least one side Kuratowski (types 0,1)
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < types.size(); ++j) {
            if (j < 2 && j < i) continue;  // unordered for Kuratowski pairs
            for (bool four : {false, true})
                for (bool flip : {false, true}) {
                    push(glue_three(types[i], false, types[j], flip, four));
                    if (!types[j].asym) break;
                }
        }
    return out;
}

std::vector<Multigraph> k34star_contractions() {
    std::vector<Multigraph> out;
    Multigraph g = k34_star();
    auto m = k34_star_matching();
    out.push_back(g);
    Multigraph g1 = contract_set(g, {m[0].first, m[0].second});
    out.push_back(g1);
    Multigraph g2 = contract_set(g1, {m[1].first, m[1].second});
    out.push_back(g2);
    Multigraph g3 = contract_set(g2, {m[2].first, m[2].second});
    out.push_back(g3);
    return out;
}

NonThreeConnectedClass classify_non_3_connected(const Multigraph& g) {
    NonThreeConnectedClass res;
    res.kind = NonThreeConnectedClass::Kind::Unknown;
    auto conn = vertex_connectivity(g, 3);
    std::string cf = canonical_form(g);
    if (conn.value < 2) {
        auto list = sporadic_13();
        for (size_t i = 0; i < list.size(); ++i)
            if (canonical_form(list[i]) == cf) {
                res.kind = NonThreeConnectedClass::Kind::InThirteen;
                res.list_index = (int)i;
                return res;
            }
        return res;
    }
    if (conn.value == 2) {
        auto list = sporadic_36();
        for (size_t i = 0; i < list.size(); ++i)
            if (canonical_form(list[i]) == cf) {
                res.kind = NonThreeConnectedClass::Kind::InThirtySix;
                res.list_index = (int)i;
                return res;
            }
        res.kind = NonThreeConnectedClass::Kind::DigonalExpansion;
        res.kernel = digonal_kernel(g);
        return res;
    }
    return res;
}

Multigraph digonal_kernel(const Multigraph& g) {
    auto conn = vertex_connectivity(g, 3);
    if (conn.value >= 3) return g;  // already 3-connected
    auto dec = cleavage_units(g);
    int nonplanar = -1;
    for (size_t i = 0; i < dec.units.size(); ++i) {
        if (!is_planar(dec.units[i].graph)) {
            if (nonplanar >= 0)
                throw std::invalid_argument("digonal_kernel: two non-planar units");
            nonplanar = (int)i;
        }
    }
    if (nonplanar < 0) throw std::invalid_argument("digonal_kernel: all units planar");
    Multigraph c = dec.units[nonplanar].graph;
    for (auto [u, v] : dec.units[nonplanar].virtual_edges) {
        c.remove_edge_one(u, v);
        c.add_edge(u, v, 2);
    }
    auto [compacted, order] = c.compact();
    return compacted;
}

Multigraph expand_digons(const Multigraph& g,
                         const std::vector<std::tuple<int, int, int>>& digon_lengths) {
    Multigraph h = g;
    for (auto [u, v, len] : digon_lengths) {
        if (h.edge_mult(u, v) != 2)
            throw std::invalid_argument("expand_digons: not a digon");
        if (len < 1) throw std::invalid_argument("expand_digons: length must be >= 1");
        if (len == 1) continue;
        h.remove_edge_all(u, v);
        int prev = u;
        for (int i = 1; i < len; ++i) {
            int mid = h.fresh_vertex_id();
            h.add_vertex(mid);
            h.add_edge(prev, mid, 2);
            prev = mid;
        }
        h.add_edge(prev, v, 2);
    }
    return h;
}

}  // namespace crit
