#include "subdivision.hpp"

#include <functional>

#include "named_graphs.hpp"

namespace crit {

namespace {

struct Searcher {
    const Multigraph& host;
    std::vector<int> pat_nodes;                      // pattern vertices, branch order
    std::vector<std::pair<int, int>> pat_edges;      // pattern edge classes
    std::map<int, int> image;                        // pattern -> host
    std::set<int> used_hosts;                        // node images
    std::set<int> interior;                          // interiors of placed branches
    std::map<std::pair<int, int>, std::vector<int>> placed;
    long long budget;
    long long steps = 0;
    bool out_of_budget = false;

    Searcher(const Multigraph& h, long long b) : host(h), budget(b) {}

    bool tick() {
        if (++steps > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // branches between node k and earlier-assigned nodes, to realize once k
    // is placed
    std::vector<std::pair<int, int>> pending_for(int k) {
        std::vector<std::pair<int, int>> out;
        std::set<int> assigned;
        for (int i = 0; i <= k; ++i) assigned.insert(pat_nodes[i]);
        int nk = pat_nodes[k];
        for (auto& e : pat_edges)
            if ((e.first == nk && assigned.count(e.second)) ||
                (e.second == nk && assigned.count(e.first)))
                out.push_back(e);
        return out;
    }

    bool assign(int k) {
        if (!tick()) return false;
        if (k == (int)pat_nodes.size()) return true;
        int pv = pat_nodes[k];
        int pdeg = 0;
        for (auto& e : pat_edges)
            if (e.first == pv || e.second == pv) ++pdeg;
        for (int hv : host.vertices()) {
            if (used_hosts.count(hv) || interior.count(hv)) continue;
            if (host.degree(hv) < pdeg) continue;
            image[pv] = hv;
            used_hosts.insert(hv);
            auto pending = pending_for(k);
            if (realize(pending, 0, k)) return true;
            used_hosts.erase(hv);
            image.erase(pv);
            if (out_of_budget) return false;
        }
        return false;
    }

    bool realize(const std::vector<std::pair<int, int>>& pending, size_t idx, int k) {
        if (out_of_budget) return false;
        if (idx == pending.size()) return assign(k + 1);
        auto e = pending[idx];
        int from = image[e.first], to = image[e.second];
        std::vector<int> path{from};
        std::set<int> onpath{from};
        return extend(path, onpath, to, pending, idx, k);
    }

    bool extend(std::vector<int>& path, std::set<int>& onpath, int to,
                const std::vector<std::pair<int, int>>& pending, size_t idx, int k) {
        if (!tick()) return false;
        int cur = path.back();
        for (int nb : host.neighbours(cur)) {
            if (nb == to && (path.size() >= 1)) {
                path.push_back(to);
                auto key = Multigraph::key(pending[idx].first, pending[idx].second);
                placed[key] = path;
                std::vector<int> added;
                for (size_t i = 1; i + 1 < path.size(); ++i) {
                    interior.insert(path[i]);
                    added.push_back(path[i]);
                }
                if (realize(pending, idx + 1, k)) return true;
                for (int v : added) interior.erase(v);
                placed.erase(key);
                path.pop_back();
                if (out_of_budget) return false;
                continue;
            }
            if (onpath.count(nb) || used_hosts.count(nb) || interior.count(nb)) continue;
            path.push_back(nb);
            onpath.insert(nb);
            if (extend(path, onpath, to, pending, idx, k)) return true;
            onpath.erase(nb);
            path.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SubdivisionResult find_subdivision(const Multigraph& g, const Multigraph& pattern,
                                   long long budget) {
    SubdivisionResult res;
    for (auto [u, v, m] : pattern.edge_classes())
        if (m > 1) throw std::invalid_argument("pattern must be simple");
    for (int v : pattern.vertex_set())
        if (pattern.degree(v) < 3)
            throw std::invalid_argument("pattern must have min degree 3");
    // quick counting rejections
    if (g.n() < pattern.n() || g.m_total() < pattern.m_total()) {
        res.outcome = SearchOutcome::None;
        return res;
    }
    Searcher s(g, budget);
    // branch on highest-degree pattern node first
    s.pat_nodes = pattern.vertices();
    std::sort(s.pat_nodes.begin(), s.pat_nodes.end(), [&](int a, int b) {
        int da = pattern.degree(a), db = pattern.degree(b);
        return da != db ? da > db : a < b;
    });
    for (auto [u, v, m] : pattern.edge_classes()) s.pat_edges.push_back({u, v});
    bool found = s.assign(0);
    res.nodes_used = s.steps;
    if (found) {
        SubdivisionEmbedding emb;
        emb.node_map = s.image;
        for (auto& [k, p] : s.placed) {
            auto path = p;
            if (path.front() != s.image[k.first]) std::reverse(path.begin(), path.end());
            emb.branches[k] = path;
        }
        res.outcome = SearchOutcome::Found;
        res.embedding = emb;
        return res;
    }
    res.outcome = s.out_of_budget ? SearchOutcome::Undecided : SearchOutcome::None;
    return res;
}

bool validate_embedding(const Multigraph& g, const Multigraph& pattern,
                        const SubdivisionEmbedding& emb) {
    // node map injective, images exist
    std::set<int> images;
    for (auto& [pv, hv] : emb.node_map) {
        if (!g.has_vertex(hv)) return false;
        if (!images.insert(hv).second) return false;
    }
    std::set<int> interiors;
    for (auto [u, v, m] : pattern.edge_classes()) {
        auto it = emb.branches.find(Multigraph::key(u, v));
        if (it == emb.branches.end()) return false;
        auto& path = it->second;
        if (path.size() < 2) return false;
        if (path.front() != emb.node_map.at(u) && path.front() != emb.node_map.at(v))
            return false;
        int a = path.front(), b = path.back();
        if (!((a == emb.node_map.at(u) && b == emb.node_map.at(v)) ||
              (a == emb.node_map.at(v) && b == emb.node_map.at(u))))
            return false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return false;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            int w = path[i];
            if (images.count(w)) return false;       // interiors avoid node images
            if (!interiors.insert(w).second) return false;  // pairwise disjoint
        }
    }
    return true;
}

int max_v2n(const Multigraph& g, int cap) {
    for (int n = cap; n >= 2; --n) {
        auto r = find_subdivision(g, v2n(n));
        if (r.outcome == SearchOutcome::Undecided)
            throw std::runtime_error("max_v2n: budget exhausted");
        if (r.outcome == SearchOutcome::Found) return n;
    }
    return 1;
}

bool v2n_free(const Multigraph& g, int n) {
    auto r = find_subdivision(g, v2n(n));
    if (r.outcome == SearchOutcome::Undecided)
        throw std::runtime_error("v2n_free: budget exhausted");
    return r.outcome == SearchOutcome::None;
}

}  // namespace crit
