#pragma once

#include <optional>

#include "multigraph.hpp"

namespace crit {

// Tutte decomposition of a 2-connected multigraph into cleavage units:
// 3-connected graphs (3-cycles and 3-bonds included), cycles of length >= 4,
// and k-bonds for k >= 4.  Virtual edges link units in a tree.
struct CleavageUnit {
    Multigraph graph;                       // includes its virtual edges
    std::vector<std::pair<int, int>> virtual_edges;  // one entry per link id
    std::vector<int> link_ids;
    enum class Kind { ThreeConnected, Cycle, Bond } kind;
};

struct CleavageDecomposition {
    std::vector<CleavageUnit> units;
    // link id -> the two unit indices it joins
    std::map<int, std::pair<int, int>> links;
};

CleavageDecomposition cleavage_units(const Multigraph& g);

// Reassembles the decomposition; the result is isomorphic to the input.
Multigraph glue_units(const CleavageDecomposition& dec);

// The 13 2-crossing-critical graphs that are not 2-connected, the 36 that
// are 2-connected with two non-planar cleavage units (16 two-unit + 20
// three-unit), and the four contractions of K34*.
std::vector<Multigraph> sporadic_13();
std::vector<Multigraph> sporadic_36();
std::vector<Multigraph> k34star_contractions();

struct NonThreeConnectedClass {
    enum class Kind { InThirteen, InThirtySix, DigonalExpansion, Unknown } kind;
    int list_index = -1;             // index into the matched list
    std::optional<Multigraph> kernel;  // the 3-connected digonal kernel
};

// Classifies a 2-crossing-critical graph of connectivity < 3 per the
// Chapter 14 trichotomy.
NonThreeConnectedClass classify_non_3_connected(const Multigraph& g);

// Kernel: g 2-connected with exactly one non-planar cleavage unit; replaces
// each virtual edge of that unit by a digon.  The result is 3-connected and
// 2-crossing-critical.
Multigraph digonal_kernel(const Multigraph& g);

// Replaces each listed digon by a digonal path of the given length.
Multigraph expand_digons(const Multigraph& g,
                         const std::vector<std::tuple<int, int, int>>& digon_lengths);

}  // namespace crit
