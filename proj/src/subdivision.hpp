#pragma once

#include <map>
#include <optional>

#include "multigraph.hpp"

namespace crit {

struct SubdivisionEmbedding {
    std::map<int, int> node_map;  // pattern vertex -> host vertex
    // pattern edge (u < v) -> host path from node_map[u] to node_map[v];
    // paths are internally disjoint and avoid all node images.
    std::map<std::pair<int, int>, std::vector<int>> branches;
};

enum class SearchOutcome { Found, None, Undecided };

struct SubdivisionResult {
    SearchOutcome outcome;
    std::optional<SubdivisionEmbedding> embedding;
    long long nodes_used = 0;
};

// Topological-subgraph test: does g contain a subdivision of pattern?
// Pattern must be simple with min degree >= 3 (its branch vertices are
// forced).  Budget bounds search nodes; exhausting it yields Undecided,
// never a silent None.
SubdivisionResult find_subdivision(const Multigraph& g, const Multigraph& pattern,
                                   long long budget = 50'000'000);

// Largest n <= cap such that g has a V_2n subdivision; 1 when not even a
// V4 = K4 subdivision exists.
int max_v2n(const Multigraph& g, int cap);

// Convenience: no subdivision of V_2n for the given n.
bool v2n_free(const Multigraph& g, int n);

// Validates embedding invariants against the host graph.
bool validate_embedding(const Multigraph& g, const Multigraph& pattern,
                        const SubdivisionEmbedding& emb);

}  // namespace crit
