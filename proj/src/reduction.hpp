#pragma once

#include <optional>

#include "multigraph.hpp"

namespace crit {

struct ReductionStep {
    std::vector<int> cut;    // the 3-cut
    std::set<int> nucleus;   // contracted bridge nucleus (ids in G_{i-1})
    int contracted_to;
};

struct ReductionTrace {
    Multigraph input;
    std::vector<ReductionStep> steps;
    Multigraph result;  // peripherally-4-connected
    std::map<int, std::set<int>> preimage;  // result vertex -> K_v in input
};

enum class ReduceOutcome { Reduced, HasK34Subdivision, TwoNonPlanarSides };

struct ReduceResult {
    ReduceOutcome outcome;
    std::optional<ReductionTrace> trace;
    std::vector<int> diagnostic_cut;  // for TwoNonPlanarSides
};

// Chapter 15 planar 3-reductions: repeatedly contracts an inclusion-maximal
// planar bridge of a reducible 3-cut until the graph is peripherally
// 4-connected.  Aborts with a diagnosis when a K_{3,4} subdivision or a 3-cut
// with two non-planar sides shows up (Theorem 15.6 territory).
ReduceResult planar_3_reduce(const Multigraph& g);

// G_v of Definition 15.7(3): K_v plus the three p4c neighbours x,y,z, edges
// redirected to them.
Multigraph g_v(const ReductionTrace& trace, int v);

struct TUProfile {
    int v;
    std::vector<int> cut;  // x, y, z (p4c neighbours of v)
    std::set<int> T, U;
    bool doglike;
    int nose = -1;
};

// Edge-disjoint-path classification of an {x,y,z}-attached piece.
TUProfile tu_classify_h(const Multigraph& h, int x, int y, int z);
TUProfile tu_classify(const ReductionTrace& trace, int v);

// Theorem 15.21 replacement of K_v inside the original graph.
Multigraph g_rep(const ReductionTrace& trace, int v);

// Definition 15.18 substitution of a compatible (T,U)-configuration for K_v.
// For a singleton K_v this replaces the vertex v by the configuration.
struct TUConfiguration {
    std::string name;
    Multigraph h;      // includes wall vertices x,y,z
    int x, y, z;
    int t_size, u_size;
};
Multigraph substitute_configuration(const Multigraph& g, int v, const TUConfiguration& c);

// General form on a reduction trace: replaces the whole K_v.  The config
// walls x,y,z attach to the p4c neighbours of v in that order.
Multigraph substitute_for_kv(const ReductionTrace& trace, int v, const TUConfiguration& c);

// Hug elimination (Theorem 15.25): maximal deletion sequence from a
// non-planar peripherally-4-connected graph; the suppressed result is
// internally 4-connected.
struct HugStep {
    std::vector<std::pair<int, int>> deleted;  // one edge or a pair
};
struct HugTrace {
    Multigraph input;
    std::vector<HugStep> steps;
    Multigraph result;             // final graph, possibly with degree-2 vertices
    Multigraph suppressed_result;  // internally 4-connected
};
HugTrace hug_eliminate(const Multigraph& g);

// Peripherally-4-connected extensions of an internally-4-connected non-planar
// graph (the closing procedure of 15.5), isomorph-free.
std::vector<Multigraph> p4c_extensions(const Multigraph& g, size_t limit = 100000);

}  // namespace crit
