#include "canonical.hpp"

#include <cstdint>
#include <functional>

namespace crit {

namespace {

// Dense view: n small, adjacency multiplicity matrix.
struct Dense {
    int n;
    std::vector<uint8_t> adj;  // n*n multiplicities (clamped at 255)
    std::vector<int> ids;      // dense index -> original id
    int at(int i, int j) const { return adj[i * n + j]; }
};

Dense densify(const Multigraph& g) {
    Dense d;
    d.ids = g.vertices();
    d.n = (int)d.ids.size();
    std::map<int, int> idx;
    for (int i = 0; i < d.n; ++i) idx[d.ids[i]] = i;
    d.adj.assign((size_t)d.n * d.n, 0);
    for (auto [u, v, m] : g.edge_classes()) {
        int a = idx[u], b = idx[v];
        uint8_t mm = (uint8_t)std::min(m, 255);
        d.adj[a * d.n + b] = mm;
        d.adj[b * d.n + a] = mm;
    }
    return d;
}

// Refine a colouring until stable.  colour[] holds small ints; classes are
// renumbered 0..k-1 by signature order each round.
void refine(const Dense& d, std::vector<int>& colour) {
    int n = d.n;
    while (true) {
        // signature: (old colour, sorted multiset of (nbr colour, mult))
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(colour[v]);
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u)
                if (d.at(v, u)) nb.emplace_back(colour[u], d.at(v, u));
            std::sort(nb.begin(), nb.end());
            for (auto& [c, m] : nb) {
                s.push_back(c);
                s.push_back(m);
            }
            sigs[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> newcol(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            newcol[sorted[i].second] = c;
        }
        if (newcol == colour) return;
        colour = newcol;
    }
}

std::string form_for_order(const Dense& d, const std::vector<int>& pos) {
    // pos[v] = canonical index of dense vertex v
    int n = d.n;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[pos[v]] = v;
    std::string s;
    s.reserve(2 + (size_t)n * (n - 1) / 2);
    s.push_back(char(n & 0xff));
    s.push_back(char((n >> 8) & 0xff));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.push_back(char(d.at(inv[i], inv[j])));
    return s;
}

struct CanonSearch {
    const Dense& d;
    std::string best;
    bool have_best = false;
    std::vector<int> best_order;  // canonical index -> dense vertex

    explicit CanonSearch(const Dense& dd) : d(dd) {}

    void run(std::vector<int> colour) {
        refine(d, colour);
        descend(colour);
    }

    void descend(const std::vector<int>& colour) {
        int n = d.n;
        // find the first non-singleton class (smallest colour value)
        int target = -1;
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) count[colour[v]]++;
        for (int c = 0; c < n; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            // discrete: colour is a permutation
            std::string f = form_for_order(d, colour);
            if (!have_best || f < best) {
                best = f;
                have_best = true;
                best_order.assign(n, 0);
                for (int v = 0; v < n; ++v) best_order[colour[v]] = v;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colour[v] != target) continue;
            std::vector<int> c2 = colour;
            // individualise v: give it a colour just below its class
            for (int u = 0; u < n; ++u)
                if (c2[u] >= target) c2[u] += 1;
            c2[v] = target;
            refine(d, c2);
            descend(c2);
        }
    }
};

}  // namespace

std::string canonical_form(const Multigraph& g) {
    Dense d = densify(g);
    if (d.n == 0) return std::string("\0\0", 2);
    CanonSearch cs(d);
    std::vector<int> colour(d.n, 0);
    cs.run(colour);
    return cs.best;
}

std::vector<int> canonical_order(const Multigraph& g) {
    Dense d = densify(g);
    if (d.n == 0) return {};
    CanonSearch cs(d);
    std::vector<int> colour(d.n, 0);
    cs.run(colour);
    std::vector<int> out(d.n);
    for (int i = 0; i < d.n; ++i) out[i] = d.ids[cs.best_order[i]];
    return out;
}

Multigraph canonical_copy(const Multigraph& g) {
    auto order = canonical_order(g);
    std::map<int, int> f;
    for (int i = 0; i < (int)order.size(); ++i) f[order[i]] = i;
    return g.relabelled(f);
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.n() != b.n() || a.m() != b.m() || a.m_total() != b.m_total()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace crit
