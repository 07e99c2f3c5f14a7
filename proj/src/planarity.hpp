#pragma once

#include <optional>

#include "multigraph.hpp"

namespace crit {

// Exact planarity (multiplicities are irrelevant and reduced internally).
bool is_planar(const Multigraph& g);

struct KuratowskiWitness {
    Multigraph subdivision;  // a K5- or K_{3,3}-subdivision inside g
    bool is_k5;              // else K_{3,3}
};

// Exact planarity with a Kuratowski witness on failure.
bool is_planar_witness(const Multigraph& g, std::optional<KuratowskiWitness>* w);

// Biconnected components (blocks) as vertex sets, Hopcroft-Tarjan.
std::vector<std::set<int>> blocks(const Multigraph& g);

}  // namespace crit
