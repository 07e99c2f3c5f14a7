#include "reduction.hpp"

#include <functional>

#include "bridges.hpp"
#include "canonical.hpp"
#include "graph_ops.hpp"
#include "named_graphs.hpp"
#include "planarity.hpp"
#include "subdivision.hpp"

namespace crit {

namespace {

// The bridge side B+ of Theorem 15.6: the component plus the cut vertices,
// their connecting edges (no cut-internal edges), and an apex on the cut.
Multigraph with_apex(const Multigraph& base, const std::set<int>& verts,
                     const std::vector<int>& cut) {
    std::set<int> all = verts;
    for (int s : cut) all.insert(s);
    Multigraph b = base.induced(all);
    for (size_t i = 0; i < cut.size(); ++i)
        for (size_t j = i + 1; j < cut.size(); ++j) b.remove_edge_all(cut[i], cut[j]);
    int apex = base.fresh_vertex_id();
    for (int s : cut) b.add_edge(apex, s);
    return b;
}

}  // namespace

ReduceResult planar_3_reduce(const Multigraph& g) {
    ReduceResult res;
    {
        auto conn = vertex_connectivity(g, 3);
        if (conn.value < 3) throw std::invalid_argument("planar_3_reduce: not 3-connected");
    }
    if (find_subdivision(g, complete_bipartite(3, 4)).outcome == SearchOutcome::Found) {
        res.outcome = ReduceOutcome::HasK34Subdivision;
        return res;
    }
    ReductionTrace trace;
    trace.input = g;
    for (int v : g.vertex_set()) trace.preimage[v] = {v};
    Multigraph cur = g;
    while (!is_peripherally_4_connected(cur)) {
        // candidate contractions: (3-cut S, bridge B) with |Nuc(B)| >= 2,
        // B+ planar, and at least two vertices outside S u Nuc(B)
        auto vs = cur.vertices();
        int n = (int)vs.size();
        std::optional<std::pair<std::vector<int>, std::set<int>>> best;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    std::vector<int> cut{vs[i], vs[j], vs[k]};
                    auto comps = components_after_removal(cur, {vs[i], vs[j], vs[k]});
                    if (comps.size() < 2) continue;
                    int nonplanar_sides = 0;
                    for (auto& c : comps)
                        if (!is_planar(with_apex(cur, c, cut))) ++nonplanar_sides;
                    if (nonplanar_sides >= 2) {
                        res.outcome = ReduceOutcome::TwoNonPlanarSides;
                        res.diagnostic_cut = cut;
                        return res;
                    }
                    for (auto& c : comps) {
                        if (c.size() < 2) continue;
                        size_t outside = cur.vertex_set().size() - 3 - c.size();
                        if (outside < 2) continue;
                        if (!is_planar(with_apex(cur, c, cut))) continue;
                        if (!best || c.size() > best->second.size())
                            best = {{cut, c}};
                    }
                }
        if (!best) throw std::runtime_error("planar_3_reduce: stuck (no planar bridge)");
        auto [cut, nuc] = *best;
        Multigraph next = contract_set(cur, nuc);
        int target = *nuc.begin();
        {
            auto conn = vertex_connectivity(next, 3);
            if (conn.value < 3)
                throw std::runtime_error("planar_3_reduce: contraction lost 3-connectivity");
        }
        ReductionStep step;
        step.cut = cut;
        step.nucleus = nuc;
        step.contracted_to = target;
        trace.steps.push_back(step);
        // preimage bookkeeping
        std::set<int> merged;
        for (int w : nuc) {
            auto it = trace.preimage.find(w);
            merged.insert(it->second.begin(), it->second.end());
            if (w != target) trace.preimage.erase(it);
        }
        trace.preimage[target] = merged;
        cur = next;
    }
    if (find_subdivision(cur, complete_bipartite(3, 4)).outcome == SearchOutcome::Found)
        throw std::runtime_error("planar_3_reduce: K34 appeared during reduction");
    trace.result = cur;
    res.outcome = ReduceOutcome::Reduced;
    res.trace = trace;
    return res;
}

Multigraph g_v(const ReductionTrace& trace, int v) {
    auto nb = trace.result.neighbours(v);
    if (nb.size() != 3) throw std::invalid_argument("g_v: vertex does not have 3 neighbours");
    const std::set<int>& kv = trace.preimage.at(v);
    Multigraph h = trace.input.induced(kv);
    for (int t : nb) {
        h.add_vertex(t);  // p4c vertex ids are input ids of their contractions
        const std::set<int>& kt = trace.preimage.at(t);
        for (int a : kv)
            for (int b : kt) {
                int m = trace.input.edge_mult(a, b);
                if (m > 0) h.add_edge(a, t, m);
            }
    }
    return h;
}

namespace {

// max-flow with unit-ish capacities given by multiplicities; enough for the
// two-path tests here
int edge_disjoint_flow(const Multigraph& g, int s, const std::set<int>& sinks, int need) {
    std::map<std::pair<int, int>, int> flow;  // signed on (u,v) with u<v
    auto residual = [&](int u, int v) {
        auto key = Multigraph::key(u, v);
        int f = flow.count(key) ? flow[key] : 0;
        if (u > v) f = -f;
        return g.edge_mult(u, v) - f;
    };
    int total = 0;
    while (total < need) {
        // BFS augmenting path from s to any sink
        std::map<int, int> prev;
        std::vector<int> q{s};
        prev[s] = s;
        int hit = -1;
        for (size_t qi = 0; qi < q.size() && hit < 0; ++qi) {
            int u = q[qi];
            for (int w : g.neighbours(u)) {
                if (prev.count(w) || residual(u, w) <= 0) continue;
                prev[w] = u;
                if (sinks.count(w) && w != s) {
                    hit = w;
                    break;
                }
                q.push_back(w);
            }
        }
        if (hit < 0) break;
        int cur = hit;
        while (cur != s) {
            int p = prev[cur];
            auto key = Multigraph::key(p, cur);
            flow[key] += p < cur ? 1 : -1;
            cur = p;
        }
        ++total;
    }
    return total;
}

// two edge-disjoint paths from w, one to each of the other two cut vertices
bool in_T(const Multigraph& h, int w, int a, int b) {
    // route both paths into a super sink: add it as a phantom by testing flow
    // to {a, b} with per-sink capacity 1: equivalent to checking a flow of 2
    // where a and b each absorb exactly one unit.  Model: add sink vertex.
    Multigraph g2 = h;
    int sink = h.fresh_vertex_id();
    g2.add_edge(a, sink);
    g2.add_edge(b, sink);
    return edge_disjoint_flow(g2, w, {sink}, 2) >= 2;
}

bool in_U(const Multigraph& h, int w, int a, int b) {
    Multigraph g2 = h;
    g2.remove_vertex(w);
    if (!g2.has_vertex(a) || !g2.has_vertex(b)) return false;
    return edge_disjoint_flow(g2, a, {b}, 2) >= 2;
}

}  // namespace

TUProfile tu_classify_h(const Multigraph& h, int x, int y, int z) {
    TUProfile p;
    p.v = -1;
    p.cut = {x, y, z};
    auto others = [&](int w) {
        std::vector<int> o;
        for (int t : p.cut)
            if (t != w) o.push_back(t);
        return std::make_pair(o[0], o[1]);
    };
    for (int w : p.cut) {
        auto [a, b] = others(w);
        if (in_T(h, w, a, b)) p.T.insert(w);
        if (in_U(h, w, a, b)) p.U.insert(w);
    }
    // The 15.3 consistency rules hold when the piece really is a K_v of a
    // min-degree-3 graph; skip them for artificial pieces with degree-2
    // interior vertices.
    bool real_piece = true;
    for (int w : h.vertex_set())
        if (w != x && w != y && w != z && h.degree(w) < 3) real_piece = false;
    if (real_piece) {
        if (p.T.size() <= 1 && !p.U.empty())
            throw std::logic_error("tu: |T|<=1 must give empty U");
        if (p.T.size() == 2) {
            std::set<int> expect;
            for (int t : p.cut)
                if (!p.T.count(t)) expect.insert(t);
            if (p.U != expect) throw std::logic_error("tu: |T|=2 must give U = third");
        }
        if (p.T.size() == 3 && p.U.size() < 2)
            throw std::logic_error("tu: |T|=3 must give |U| in {2,3}");
    }
    p.doglike = p.T.size() == 3 && p.U.size() == 2;
    if (p.doglike)
        for (int t : p.cut)
            if (!p.U.count(t)) p.nose = t;
    return p;
}

TUProfile tu_classify(const ReductionTrace& trace, int v) {
    auto nb = trace.result.neighbours(v);
    if (nb.size() != 3) throw std::invalid_argument("tu_classify: needs a degree-3 vertex");
    Multigraph h = g_v(trace, v);
    TUProfile p = tu_classify_h(h, nb[0], nb[1], nb[2]);
    p.v = v;
    return p;
}

namespace {

// All K_v-K_t edges share a vertex (Lemma 15.9); returns it and whether it
// lies in K_t.
std::pair<int, bool> shared_attachment(const ReductionTrace& trace, int v, int t) {
    const std::set<int>& kv = trace.preimage.at(v);
    const std::set<int>& kt = trace.preimage.at(t);
    std::set<int> kv_side, kt_side;
    for (int a : kv)
        for (int b : kt)
            if (trace.input.has_edge(a, b)) {
                kv_side.insert(a);
                kt_side.insert(b);
            }
    if (kt_side.size() == 1) return {*kt_side.begin(), true};
    if (kv_side.size() == 1) return {*kv_side.begin(), false};
    throw std::logic_error("no single vertex meets all K_v-K_t edges (Lemma 15.9)");
}

}  // namespace

Multigraph g_rep(const ReductionTrace& trace, int v) {
    const std::set<int>& kv = trace.preimage.at(v);
    if (kv.size() < 2) return trace.input;  // nothing to do
    auto nb = trace.result.neighbours(v);
    if (nb.size() != 3) throw std::invalid_argument("g_rep: vertex must have 3 neighbours");
    TUProfile prof = tu_classify(trace, v);
    Multigraph out;

    auto cap_parallel = [&](Multigraph& g, const std::set<int>& repverts) {
        // fine print: when the shared attachment t' lies in K_t, retain at
        // most two parallel edges between t' and the contracted vertex
        for (int t : nb) {
            auto [tp, in_kt] = shared_attachment(trace, v, t);
            if (!in_kt) continue;
            for (int r : repverts)
                if (g.has_vertex(r) && g.edge_mult(r, tp) > 2) g.set_edge_mult(r, tp, 2);
        }
    };

    if (prof.doglike) {
        // contract each component of K_v - e, where e is the cut-edge of
        // G_v - nose separating the other two neighbours
        Multigraph h = g_v(trace, v);
        h.remove_vertex(prof.nose);
        std::optional<std::pair<int, int>> cut_edge;
        for (auto [a, b, m] : h.edge_classes()) {
            if (!kv.count(a) || !kv.count(b)) continue;
            Multigraph h2 = h;
            h2.remove_edge_all(a, b);
            auto comps = components_after_removal(h2, {});
            if (comps.size() > 1) {
                cut_edge = {a, b};
                break;
            }
        }
        if (!cut_edge) throw std::logic_error("g_rep: doglike without cut-edge");
        Multigraph kvg = trace.input.induced(kv);
        kvg.remove_edge_all(cut_edge->first, cut_edge->second);
        auto comps = components_after_removal(kvg, {});
        if (comps.size() != 2) throw std::logic_error("g_rep: cut-edge split failed");
        Multigraph g2 = contract_set(trace.input, comps[0]);
        g2 = contract_set(g2, comps[1]);
        cap_parallel(g2, {*comps[0].begin(), *comps[1].begin()});
        out = g2;
    } else {
        bool dog_neighbour = false;
        int dog_x = -1;
        for (int t : nb) {
            if (trace.result.neighbours(t).size() != 3) continue;
            if (trace.preimage.at(t).size() < 1) continue;
            TUProfile tp = tu_classify(trace, t);
            if (tp.doglike) {
                dog_neighbour = true;
                dog_x = t;
            }
        }
        bool t33 = prof.T.size() == 3 && prof.U.size() == 3;
        if (!dog_neighbour || t33) {
            Multigraph g2 = contract_set(trace.input, kv);
            cap_parallel(g2, {*kv.begin()});
            out = g2;
        } else {
            // case (c): keep a cycle through the three shared attachments,
            // contracted to a triangle
            (void)dog_x;
            std::vector<int> primes;
            std::vector<bool> prime_in_kv;
            for (int t : nb) {
                auto [tp, in_kt] = shared_attachment(trace, v, t);
                primes.push_back(tp);
                prime_in_kv.push_back(!in_kt);
            }
            // find a cycle through all three primes in K_v plus the in-K_t primes
            std::set<int> arena = kv;
            for (size_t i = 0; i < primes.size(); ++i) arena.insert(primes[i]);
            Multigraph ka = trace.input.induced(arena);
            // search a cycle containing the three primes
            std::vector<int> cyc = [&]() -> std::vector<int> {
                // DFS over simple cycles through primes[0]
                std::vector<int> path{primes[0]};
                std::set<int> on{primes[0]};
                std::vector<int> found;
                std::function<bool()> dfs = [&]() -> bool {
                    int cur = path.back();
                    for (int w : ka.neighbours(cur)) {
                        if (w == primes[0] && path.size() >= 3) {
                            bool all = true;
                            for (int p : primes)
                                if (!on.count(p)) all = false;
                            if (all) {
                                found = path;
                                return true;
                            }
                            continue;
                        }
                        if (on.count(w)) continue;
                        path.push_back(w);
                        on.insert(w);
                        if (dfs()) return true;
                        on.erase(w);
                        path.pop_back();
                    }
                    return false;
                };
                dfs();
                return found;
            }();
            if (cyc.empty()) throw std::logic_error("g_rep: no cycle through attachments");
            // delete everything in K_v not on the cycle, then contract the
            // cycle segments between consecutive primes
            Multigraph g2 = trace.input;
            for (int w : kv) {
                bool oncyc = std::find(cyc.begin(), cyc.end(), w) != cyc.end();
                if (!oncyc) g2.remove_vertex(w);
            }
            // contract each prime-to-prime arc onto its leading prime
            std::vector<size_t> prime_pos;
            for (size_t i = 0; i < cyc.size(); ++i)
                if (std::find(primes.begin(), primes.end(), cyc[i]) != primes.end())
                    prime_pos.push_back(i);
            for (size_t pi = 0; pi < prime_pos.size(); ++pi) {
                size_t from = prime_pos[pi];
                size_t to = prime_pos[(pi + 1) % prime_pos.size()];
                std::set<int> seg{cyc[from]};
                for (size_t i = (from + 1) % cyc.size(); i != to; i = (i + 1) % cyc.size())
                    seg.insert(cyc[i]);
                std::set<int> seg_in_g;
                for (int w : seg)
                    if (g2.has_vertex(w)) seg_in_g.insert(w);
                if (seg_in_g.size() >= 2) g2 = contract_set(g2, seg_in_g);
            }
            cap_parallel(g2, std::set<int>(primes.begin(), primes.end()));
            out = g2;
        }
    }
    return out;
}

Multigraph substitute_configuration(const Multigraph& g, int v, const TUConfiguration& c) {
    auto nb = g.neighbours(v);
    if (nb.size() != 3)
        throw std::invalid_argument("substitute_configuration: vertex must have 3 neighbours");
    // compatibility: wall degrees match the edge multiplicities at v
    std::map<int, int> walls{{c.x, nb[0]}, {c.y, nb[1]}, {c.z, nb[2]}};
    for (auto& [cw, gw] : walls)
        if (c.h.degree(cw) != g.edge_mult(v, gw))
            throw std::invalid_argument("substitute_configuration: wall degree mismatch");
    Multigraph out = g;
    out.remove_vertex(v);
    int off = std::max(g.fresh_vertex_id(), c.h.fresh_vertex_id());
    std::map<int, int> f;
    for (int w : c.h.vertex_set())
        f[w] = walls.count(w) ? walls[w] : w + off;
    for (auto [a, b, m] : c.h.edge_classes()) out.add_edge(f[a], f[b], m);
    return out;
}

Multigraph substitute_for_kv(const ReductionTrace& trace, int v, const TUConfiguration& c) {
    const std::set<int>& kv = trace.preimage.at(v);
    auto nb = trace.result.neighbours(v);
    if (nb.size() != 3) throw std::invalid_argument("substitute_for_kv: wrong degree");
    Multigraph h = g_v(trace, v);
    int cwalls[3] = {c.x, c.y, c.z};
    // anchors: for each neighbour t, the single vertex meeting all K_vK_t
    // edges; in K_t when possible (then the config wall lands on it), else in
    // K_v (then the wall's unique neighbour in H lands on it)
    Multigraph out = trace.input;
    std::map<int, int> glue;  // config vertex -> graph vertex
    std::set<int> dropped_walls;
    for (int i = 0; i < 3; ++i) {
        int t = nb[i];
        if (c.h.degree(cwalls[i]) != h.degree(t))
            throw std::invalid_argument("substitute_for_kv: wall degree mismatch");
        auto [tp, in_kt] = shared_attachment(trace, v, t);
        if (in_kt) {
            glue[cwalls[i]] = tp;
        } else {
            auto hn = c.h.neighbours(cwalls[i]);
            std::set<int> distinct(hn.begin(), hn.end());
            if (distinct.size() != 1)
                throw std::invalid_argument("substitute_for_kv: N-wall needs one neighbour");
            glue[*distinct.begin()] = tp;
            dropped_walls.insert(cwalls[i]);
        }
    }
    // delete K_v except anchors that live inside it
    std::set<int> keep;
    for (auto& [cw, gv_] : glue) keep.insert(gv_);
    for (int w : kv)
        if (!keep.count(w)) out.remove_vertex(w);
    // remove stale edges between kept anchors and K_t sides?  Anchors in K_v
    // keep their K_t edges by Definition 15.18; anchors in K_t lost all K_v
    // edges with the deletion above.
    int off = std::max(out.fresh_vertex_id(), c.h.fresh_vertex_id());
    std::map<int, int> f = glue;
    for (int w : c.h.vertex_set()) {
        if (dropped_walls.count(w)) continue;
        if (!f.count(w)) f[w] = w + off;
    }
    for (auto [a, b, m] : c.h.edge_classes()) {
        if (dropped_walls.count(a) || dropped_walls.count(b)) continue;
        // avoid double-adding the anchor-to-K_t edges that survived deletion
        if (f.count(a) && f.count(b) && keep.count(f[a]) && keep.count(f[b]) &&
            out.has_edge(f[a], f[b]))
            continue;
        out.add_edge(f[a], f[b], m);
    }
    return out;
}

HugTrace hug_eliminate(const Multigraph& g) {
    {
        CutWitness w;
        if (is_planar(g)) throw std::invalid_argument("hug_eliminate: planar input");
        if (!is_peripherally_4_connected(g, &w))
            throw std::invalid_argument("hug_eliminate: input not peripherally-4-connected");
    }
    HugTrace trace;
    trace.input = g;
    Multigraph cur = g;
    // Each candidate step is validated against the 15.25 invariants before it
    // is taken: the result must stay non-planar, its suppression must stay
    // peripherally-4-connected, and a new degree-2 vertex may only arise from
    // a simultaneous pair, with both neighbours of degree 3.  The literal
    // bear-hug condition admits a few pair deletions that break these, so the
    // invariants themselves are the arbiter.
    auto valid_step = [&](const Multigraph& before, const std::vector<std::pair<int, int>>& del) {
        Multigraph after = before;
        for (auto [u, w] : del) after.remove_edge_one(u, w);
        if (is_planar(after)) return false;
        for (int w : after.vertex_set()) {
            if (after.degree(w) == 2 && before.degree(w) != 2) {
                if (del.size() != 2) return false;
                for (int nb : after.neighbours(w))
                    if (after.degree(nb) != 3) return false;
            }
            if (after.degree(w) < 2) return false;
        }
        Multigraph sup;
        try {
            sup = suppress_degree_two(after);
        } catch (const std::invalid_argument&) {
            return false;
        }
        return is_peripherally_4_connected(sup);
    };
    // Backtracking over validated step sequences: greedy order can dead-end
    // (no remaining candidate keeps the invariants), so search for a sequence
    // that reaches a hug-free graph.
    std::set<std::string> dead;
    std::vector<HugStep> best_steps;
    Multigraph best = cur;
    size_t best_hugs = find_hugs(cur).size();
    std::vector<HugStep> steps;
    std::function<bool(const Multigraph&)> dfs = [&](const Multigraph& state) -> bool {
        auto hugs = find_hugs(state);
        if (hugs.empty()) {
            best_steps = steps;
            best = state;
            return true;
        }
        if (hugs.size() < best_hugs) {
            best_hugs = hugs.size();
            best_steps = steps;
            best = state;
        }
        std::string cf = canonical_form(state);
        if (dead.count(cf)) return false;
        std::vector<std::vector<std::pair<int, int>>> candidates;
        for (auto& h : hugs)
            if (h.kind == Hug::Kind::Deletable) candidates.push_back({h.edge});
        for (auto& h : hugs)
            if (h.kind == Hug::Kind::SimultaneousPair)
                candidates.push_back({h.edge, h.partner});
        for (auto& del : candidates) {
            if (!valid_step(state, del)) continue;
            Multigraph after = state;
            for (auto [u, w] : del) after.remove_edge_one(u, w);
            steps.push_back({del});
            if (dfs(after)) return true;
            steps.pop_back();
        }
        dead.insert(cf);
        return false;
    };
    dfs(cur);
    trace.steps = best_steps;
    trace.result = best;
    trace.suppressed_result = suppress_degree_two(best);
    return trace;
}

std::vector<Multigraph> p4c_extensions(const Multigraph& g, size_t limit) {
    {
        CutWitness w;
        if (!is_internally_4_connected(g, &w))
            throw std::invalid_argument("p4c_extensions: input not internally-4-connected");
        if (is_planar(g)) throw std::invalid_argument("p4c_extensions: planar input");
    }
    std::vector<Multigraph> out;
    std::set<std::string> seen;
    std::vector<Multigraph> queue{g};
    seen.insert(canonical_form(g));
    out.push_back(g);
    while (!queue.empty() && out.size() < limit) {
        Multigraph cur = queue.back();
        queue.pop_back();
        std::vector<Multigraph> nexts;
        // move 1: join two non-adjacent neighbours of a degree-3 vertex
        for (int v : cur.vertex_set()) {
            auto nb = cur.neighbours(v);
            if (nb.size() != 3 || cur.degree(v) != 3) continue;
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    if (cur.has_edge(nb[i], nb[j])) continue;
                    Multigraph g2 = cur;
                    g2.add_edge(nb[i], nb[j]);
                    nexts.push_back(g2);
                }
        }
        // move 2: subdivide an edge joining degree-3 vertices, join a
        // neighbour of each end to the subdivision vertex
        for (auto [u, v, m] : cur.edge_classes()) {
            if (cur.degree(u) != 3 || cur.degree(v) != 3) continue;
            for (int a : cur.neighbours(u)) {
                if (a == v) continue;
                for (int b : cur.neighbours(v)) {
                    if (b == u || b == a) continue;
                    Multigraph g2 = cur;
                    int s = g2.fresh_vertex_id();
                    g2.remove_edge_one(u, v);
                    g2.add_edge(u, s);
                    g2.add_edge(s, v);
                    g2.add_edge(s, a);
                    g2.add_edge(s, b);
                    nexts.push_back(g2);
                }
            }
        }
        for (auto& g2 : nexts) {
            if (is_planar(g2)) continue;
            if (!is_peripherally_4_connected(g2)) continue;
            std::string cf = canonical_form(g2);
            if (!seen.insert(cf).second) continue;
            out.push_back(g2);
            queue.push_back(g2);
            if (out.size() >= limit) break;
        }
    }
    return out;
}

}  // namespace crit
