#pragma once

#include <string>

#include "multigraph.hpp"

namespace crit {

enum class GraphFormat { Graph6, Sparse6, EdgeList };

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
          offset(off) {}
};

// graph6 carries simple graphs only; sparse6 encodes parallel edges by
// repetition; edgelist is "n=<count>" then lines "u-v" or "u-v x<mult>".
Multigraph decode_graph(const std::string& text, GraphFormat fmt);
std::string encode_graph(const Multigraph& g, GraphFormat fmt);

GraphFormat guess_format(const std::string& text);

}  // namespace crit
