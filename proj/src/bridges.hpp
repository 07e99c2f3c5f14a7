#pragma once

#include "multigraph.hpp"

namespace crit {

struct HBridge {
    std::set<int> nucleus;      // empty for an edge-bridge
    std::set<int> attachments;  // vertices of H in the bridge
    std::vector<std::pair<int, int>> edges;  // edge instances of the bridge
};

struct BridgeDecomposition {
    std::vector<HBridge> bridges;
    // residual arcs per bridge when H is a cycle: each arc is a vertex path
    std::vector<std::vector<std::vector<int>>> residual_arcs;
};

// H-bridges of the subgraph h in g (Def 4.1): each parallel copy between two
// h-vertices is its own edge-bridge; other bridges come from components of
// g - V(h).  When `cycle` is given (h's vertices in cyclic order), residual
// arcs are filled in.
BridgeDecomposition bridges(const Multigraph& g, const Multigraph& h,
                            const std::vector<int>* cycle = nullptr);

enum class OverlapKind { Skew, ThreeEquivalent };

struct OverlapDiagram {
    int num_bridges;
    std::vector<std::tuple<int, int, OverlapKind>> edges;
    bool bipartite;
    std::vector<int> colour;     // 2-colouring certificate when bipartite
    std::vector<int> odd_cycle;  // bridge indices of an odd cycle otherwise
};

// Overlap diagram OD(C) of a cycle (ordered vertex list) per Lemma 4.3.
OverlapDiagram overlap_diagram(const Multigraph& g, const std::vector<int>& cycle);

// Tutte: planar iff every cycle has bipartite overlap diagram (Thm 4.5(2)).
// Exhaustive cycle enumeration; intended for <= 12-vertex cross-validation.
bool tutte_planarity(const Multigraph& g);

// All simple cycles of the underlying simple graph, each rooted at its
// minimal vertex, second vertex < last vertex.
std::vector<std::vector<int>> all_cycles(const Multigraph& g);

}  // namespace crit
