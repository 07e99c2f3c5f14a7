#pragma once

#include <random>

#include "multigraph.hpp"

namespace crit::testutil {

// Random multigraph on <= max_n vertices, multiplicity <= max_mult.
inline Multigraph random_multigraph(std::mt19937_64& rng, int max_n, int max_mult,
                                    double p = 0.35) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    Multigraph g;
    g.add_vertices_upto(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> md(1, max_mult);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j, md(rng));
    return g;
}

// Random simple graph on exactly n vertices with m edges (if possible).
inline Multigraph random_simple(std::mt19937_64& rng, int n, int m) {
    Multigraph g;
    g.add_vertices_upto(n);
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    std::shuffle(all.begin(), all.end(), rng);
    for (int k = 0; k < m && k < (int)all.size(); ++k)
        g.add_edge(all[k].first, all[k].second);
    return g;
}

inline Multigraph random_relabel(std::mt19937_64& rng, const Multigraph& g) {
    auto vs = g.vertices();
    std::vector<int> perm = vs;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<int, int> f;
    for (size_t i = 0; i < vs.size(); ++i) f[vs[i]] = perm[i];
    return g.relabelled(f);
}

}  // namespace crit::testutil
