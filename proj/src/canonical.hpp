#pragma once

#include <string>

#include "multigraph.hpp"

namespace crit {

// Canonical byte string: equal iff the multigraphs are isomorphic
// (multiplicities respected).  Degree/neighbour-multiset refinement with
// backtracking over ties; fine for the graph sizes in this project.
std::string canonical_form(const Multigraph& g);

// The graph relabelled to 0..n-1 in canonical order (used for stable output).
Multigraph canonical_copy(const Multigraph& g);

// Canonical vertex order: position i holds the original vertex id placed at
// canonical index i.
std::vector<int> canonical_order(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace crit
