#include "smallgen.hpp"

#include "canonical.hpp"
#include "graph_ops.hpp"

namespace crit {

std::vector<Multigraph> all_graphs_exactly(int n) {
    std::vector<Multigraph> level;
    {
        Multigraph one;
        one.add_vertex(0);
        level.push_back(one);
    }
    for (int k = 2; k <= n; ++k) {
        std::vector<Multigraph> next;
        std::set<std::string> seen;
        for (auto& g : level) {
            int v = k - 1;
            for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
                Multigraph g2 = g;
                g2.add_vertex(v);
                for (int b = 0; b < k - 1; ++b)
                    if (mask & (1 << b)) g2.add_edge(v, b);
                std::string cf = canonical_form(g2);
                if (seen.insert(cf).second) next.push_back(g2);
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Multigraph> all_graphs_min_degree3(int n) {
    std::vector<Multigraph> out;
    for (auto& g : all_graphs_exactly(n)) {
        bool ok = is_connected(g);
        for (int v : g.vertex_set())
            if (g.degree(v) < 3) ok = false;
        if (ok) out.push_back(g);
    }
    return out;
}

}  // namespace crit
