#pragma once

#include <optional>

#include "multigraph.hpp"

namespace crit {

bool is_connected(const Multigraph& g);
std::vector<std::set<int>> components(const Multigraph& g);
std::vector<std::set<int>> components_after_removal(const Multigraph& g,
                                                    const std::set<int>& removed);

// Exact vertex connectivity capped at `cap` (spec fixes cap <= 4).  Returns
// min(kappa(g), cap+1) where cap+1 stands for ">cap"; for complete graphs the
// usual convention kappa(K_n) = n-1 applies.  A witness cut is produced
// whenever the result is <= cap.
struct ConnectivityResult {
    int value;              // exact connectivity if <= cap, else cap+1
    bool exceeds_cap;       // true when value would be > cap
    std::optional<CutWitness> witness;
};
ConnectivityResult vertex_connectivity(const Multigraph& g, int cap = 4);

// 3-connected and every 3-cut splits off only single vertices (Def 15.1).
bool is_peripherally_4_connected(const Multigraph& g, CutWitness* fail = nullptr);

// Peripherally-4-connected with no hugs.
bool is_internally_4_connected(const Multigraph& g, CutWitness* fail = nullptr);

// Suppression of degree-2 vertices, ascending id order.  Parallel edges
// created by suppression are kept as multiplicity.  Rejects cycle components
// and any suppression that would create a self-loop.
Multigraph suppress_degree_two(const Multigraph& g);

// Contracts a connected vertex set to a single vertex (the smallest id in s);
// parallel edges merge into multiplicities, self-loops are discarded.
Multigraph contract_set(const Multigraph& g, const std::set<int>& s);

struct Hug {
    std::pair<int, int> edge;   // the hug
    int head;                   // degree-3 vertex opposite the edge
    enum class Kind { Deletable, Bear, SimultaneousPair } kind;
    std::pair<int, int> partner{-1, -1};  // second edge of a simultaneous pair
};

// All hugs of g with their 15.5 classification.  Degree here means number of
// distinct neighbours; parallel edges at a triangle disqualify nothing.
std::vector<Hug> find_hugs(const Multigraph& g);

}  // namespace crit
