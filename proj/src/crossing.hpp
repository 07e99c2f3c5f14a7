#pragma once

#include <optional>

#include "multigraph.hpp"

namespace crit {

// A set of crossings realizing a drawing with at most k crossings.  Edge
// instances are (u, v, copy); copy distinguishes parallel edges.
struct EdgeInstance {
    int u, v, copy;
    bool operator==(const EdgeInstance& o) const {
        return u == o.u && v == o.v && copy == o.copy;
    }
    bool operator<(const EdgeInstance& o) const {
        return std::tie(u, v, copy) < std::tie(o.u, o.v, o.copy);
    }
};

struct CrossingConfiguration {
    std::vector<std::pair<EdgeInstance, EdgeInstance>> pairs;
    // For an edge instance in two pairs, the order of its two crossings along
    // the edge (from the smaller endpoint).  Keyed by instance.
    std::vector<std::pair<EdgeInstance, std::pair<int, int>>> orders;
};

// Replace each crossing of the configuration by a degree-4 vertex (honouring
// per-edge crossing order); the result is planar iff the configuration
// realizes a drawing of g with exactly those crossings.
Multigraph planarize(const Multigraph& g, const CrossingConfiguration& cfg);

// Decides cr(g) <= k for k <= 3 by exhaustive search over crossing
// configurations: no self-crossings, no adjacent-edge crossings, no repeated
// pair, each instance in at most two pairs; parallel instances never paired
// with each other.
bool cr_le(const Multigraph& g, int k,
           CrossingConfiguration* witness = nullptr);

// Minimal k <= cap with cr_le(g, k), else cap+1 ("greater than cap").
struct CrossingNumber {
    int value;
    bool exceeds_cap;
    std::optional<CrossingConfiguration> witness;
};
CrossingNumber crossing_number(const Multigraph& g, int cap);

struct CriticalityVerdict {
    enum class Status { KCritical, CrTooLow, NonCriticalEdge, DegenerateInput };
    Status status;
    int cr_lower;  // k when status proves cr >= k, else the found bound
    std::optional<CrossingConfiguration> witness;  // a k-1-crossing drawing of g-e
    std::optional<std::pair<int, int>> bad_edge;   // non-critical edge
};

// Exact k-crossing-criticality for k <= 3.  Suppresses degree-2 vertices
// first; rejects cycle components.  Each parallel class is tested once.
CriticalityVerdict is_k_crossing_critical(const Multigraph& g, int k);

struct ParallelDiagnostics {
    bool ok;
    std::vector<std::string> violations;
};

// Observation 13.2 checks on a verified 2-crossing-critical graph:
// mu(e) <= 2 everywhere, and G - {e,e'} planar for every digon.
ParallelDiagnostics validate_parallel_structure(const Multigraph& g);

}  // namespace crit
