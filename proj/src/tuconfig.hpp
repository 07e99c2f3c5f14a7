#pragma once

#include "reduction.hpp"

namespace crit {

// Parses and validates the basic (T,U)-configuration catalog: at most 20
// entries, each at most 6 vertices, each matching its declared (T,U) class
// under tu_classify_h and planar with an apex on {x,y,z}.
std::vector<TUConfiguration> configuration_catalog(const std::string& data_text);

// Entries of a given class.
std::vector<TUConfiguration> configurations_of_class(
    const std::vector<TUConfiguration>& cat, int t_size, int u_size);

}  // namespace crit
