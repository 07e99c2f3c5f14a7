#include "crossing.hpp"

#include <functional>

#include "graph_ops.hpp"
#include "planarity.hpp"

namespace crit {

namespace {

struct InstanceCrossings {
    // per instance: indices into cfg.pairs that touch it, in drawing order
    std::map<EdgeInstance, std::vector<int>> along;
};

InstanceCrossings gather(const CrossingConfiguration& cfg) {
    InstanceCrossings ic;
    for (int i = 0; i < (int)cfg.pairs.size(); ++i) {
        ic.along[cfg.pairs[i].first].push_back(i);
        ic.along[cfg.pairs[i].second].push_back(i);
    }
    for (auto& [inst, list] : ic.along) {
        if (list.size() == 2) {
            for (auto& [who, ord] : cfg.orders)
                if (who == inst && ord.first == list[1]) std::swap(list[0], list[1]);
        }
        if (list.size() > 2) throw std::invalid_argument("instance crossed > 2 times");
    }
    return ic;
}

}  // namespace

Multigraph planarize(const Multigraph& g, const CrossingConfiguration& cfg) {
    Multigraph h = g;
    if (cfg.pairs.empty()) return h;
    InstanceCrossings ic = gather(cfg);
    int next = g.fresh_vertex_id();
    std::vector<int> xvert(cfg.pairs.size());
    for (size_t i = 0; i < cfg.pairs.size(); ++i) xvert[i] = next++;
    for (auto& [inst, list] : ic.along) {
        h.remove_edge_one(inst.u, inst.v);
        int prev = inst.u;
        for (int ci : list) {
            h.add_edge(prev, xvert[ci]);
            prev = xvert[ci];
        }
        h.add_edge(prev, inst.v);
    }
    return h;
}

namespace {

// Enumerate configurations of exactly `size` crossings over the candidate
// pair list; calls cb for each planarization-ready configuration.
bool enumerate_configs(const Multigraph& g,
                       const std::vector<std::pair<EdgeInstance, EdgeInstance>>& cand,
                       int size,
                       const std::function<bool(const CrossingConfiguration&)>& cb) {
    std::vector<int> chosen;
    std::map<EdgeInstance, int> used;

    std::function<bool(int)> rec = [&](int start) -> bool {
        if ((int)chosen.size() == size) {
            CrossingConfiguration cfg;
            for (int i : chosen) cfg.pairs.push_back(cand[i]);
            // instances used twice: enumerate both orders
            std::vector<EdgeInstance> doubled;
            for (auto& [inst, cnt] : used)
                if (cnt == 2) doubled.push_back(inst);
            int combos = 1 << (int)doubled.size();
            for (int mask = 0; mask < combos; ++mask) {
                cfg.orders.clear();
                for (size_t d = 0; d < doubled.size(); ++d) {
                    // find the two pair indices touching this instance
                    std::vector<int> idx;
                    for (int p = 0; p < (int)cfg.pairs.size(); ++p)
                        if (cfg.pairs[p].first == doubled[d] ||
                            cfg.pairs[p].second == doubled[d])
                            idx.push_back(p);
                    if (mask & (1 << d))
                        cfg.orders.push_back({doubled[d], {idx[1], idx[0]}});
                    else
                        cfg.orders.push_back({doubled[d], {idx[0], idx[1]}});
                }
                if (cb(cfg)) return true;
            }
            return false;
        }
        for (int i = start; i < (int)cand.size(); ++i) {
            auto& [a, b] = cand[i];
            if (used[a] >= 2 || used[b] >= 2) continue;
            used[a]++;
            used[b]++;
            chosen.push_back(i);
            if (rec(i + 1)) return true;
            chosen.pop_back();
            used[a]--;
            used[b]--;
        }
        return false;
    };
    return rec(0);
}

std::vector<EdgeInstance> instances_of(const Multigraph& g) {
    std::vector<EdgeInstance> out;
    for (auto [u, v, m] : g.edge_classes())
        for (int c = 0; c < m; ++c) out.push_back({u, v, c});
    return out;
}

bool share_endpoint(const EdgeInstance& a, const EdgeInstance& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

}  // namespace

bool cr_le(const Multigraph& g, int k, CrossingConfiguration* witness) {
    if (is_planar(g)) {
        if (witness) *witness = {};
        return true;
    }
    if (k <= 0) return false;
    auto inst = instances_of(g);
    std::vector<std::pair<EdgeInstance, EdgeInstance>> cand;
    for (size_t i = 0; i < inst.size(); ++i)
        for (size_t j = i + 1; j < inst.size(); ++j)
            if (!share_endpoint(inst[i], inst[j])) cand.push_back({inst[i], inst[j]});
    for (int size = 1; size <= k; ++size) {
        bool found = enumerate_configs(
            g, cand, size, [&](const CrossingConfiguration& cfg) {
                Multigraph h = planarize(g, cfg);
                if (is_planar(h)) {
                    if (witness) *witness = cfg;
                    return true;
                }
                return false;
            });
        if (found) return true;
    }
    return false;
}

CrossingNumber crossing_number(const Multigraph& g, int cap) {
    CrossingNumber r;
    r.exceeds_cap = false;
    for (int k = 0; k <= cap; ++k) {
        CrossingConfiguration w;
        if (cr_le(g, k, &w)) {
            r.value = k;
            r.witness = w;
            return r;
        }
    }
    r.value = cap + 1;
    r.exceeds_cap = true;
    return r;
}

CriticalityVerdict is_k_crossing_critical(const Multigraph& g, int k) {
    CriticalityVerdict v;
    Multigraph h;
    try {
        h = suppress_degree_two(g);
    } catch (const std::invalid_argument&) {
        v.status = CriticalityVerdict::Status::DegenerateInput;
        v.cr_lower = 0;
        return v;
    }
    for (int u : h.vertex_set())
        if (h.degree(u) < 3) {
            v.status = CriticalityVerdict::Status::DegenerateInput;
            v.cr_lower = 0;
            return v;
        }
    CrossingConfiguration w;
    if (cr_le(h, k - 1, &w)) {
        v.status = CriticalityVerdict::Status::CrTooLow;
        v.cr_lower = k - 1;
        v.witness = w;
        return v;
    }
    for (auto [a, b, m] : h.edge_classes()) {
        Multigraph h2 = h;
        h2.remove_edge_one(a, b);
        if (!cr_le(h2, k - 1)) {
            v.status = CriticalityVerdict::Status::NonCriticalEdge;
            v.cr_lower = k;
            v.bad_edge = {a, b};
            return v;
        }
    }
    v.status = CriticalityVerdict::Status::KCritical;
    v.cr_lower = k;
    return v;
}

ParallelDiagnostics validate_parallel_structure(const Multigraph& g) {
    ParallelDiagnostics d;
    d.ok = true;
    for (auto [u, v, m] : g.edge_classes()) {
        if (m > 2) {
            d.ok = false;
            d.violations.push_back("mu(" + std::to_string(u) + "," + std::to_string(v) +
                                   ") = " + std::to_string(m) + " > 2");
        }
        if (m == 2) {
            Multigraph h = g;
            h.remove_edge_all(u, v);
            if (!is_planar(h)) {
                d.ok = false;
                d.violations.push_back("G - digon {" + std::to_string(u) + "," +
                                       std::to_string(v) + "} is not planar");
            }
        }
    }
    return d;
}

}  // namespace crit
