#pragma once

#include "multigraph.hpp"

namespace crit {

// All simple graphs on exactly n vertices up to isomorphism, by incremental
// vertex augmentation with canonical-form dedup.  Counts for n = 1..8:
// 1, 2, 4, 11, 34, 156, 1044, 12346.
std::vector<Multigraph> all_graphs_exactly(int n);

// Connected, min-degree >= 3 filter applied.
std::vector<Multigraph> all_graphs_min_degree3(int n);

}  // namespace crit
