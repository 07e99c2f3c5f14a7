#pragma once

#include <functional>
#include <optional>

#include "crossing.hpp"
#include "multigraph.hpp"

namespace crit {

// A tile (G, lambda, rho): wall sequences ordered bottom-to-top, disjoint.
struct Tile {
    Multigraph g;
    std::vector<int> left, right;
};

void check_tile(const Tile& t);

// Joins compatible tiles by identifying right wall of a with left wall of b
// termwise; multiplicities and degree-2 vertices are kept.
Tile tile_join(const Tile& a, const Tile& b);

enum class TileOp { RightInvert, LeftInvert, Invert, Reverse };
Tile tile_transform(const Tile& t, TileOp op);

// Identifies left wall with right wall termwise.
Multigraph tile_cyclize(const Tile& t);

// Square-boundary gadget: two corner vertices, the boundary cycle
// a, l1..lk, b, r_l..r1, a, and an apex joined to every boundary vertex.
// Planar iff the tile has a crossing-free tile drawing.
Multigraph tile_frame_graph(const Tile& t);

// Tile crossing number decision: some configuration of <= m crossings among
// the tile's own edges makes the frame gadget planar.
bool tcr_le(const Tile& t, int m, CrossingConfiguration* witness = nullptr);

// Planar as a tile, and deleting any edge from the right-inversion leaves
// tile crossing number < k.
bool is_k_degenerate(const Tile& t, int k);

// Wall-respecting canonical form (marker chains encode the wall sequences).
std::string tile_canonical_form(const Tile& t);

struct TileProvenance {
    std::string picture, frame;
    bool rotated;
};

struct TileCatalog {
    std::vector<Tile> tiles;
    std::vector<TileProvenance> provenance;
    std::map<std::string, std::vector<int>> per_picture;  // picture -> tile indices
};

struct TileData {
    struct Block {
        std::string name;
        Multigraph g;
        std::map<std::string, int> vid;  // vertex name -> id
        std::vector<std::string> square; // TL BL TR BR
        std::vector<std::string> lwall, rwall;
        std::vector<std::pair<std::string, std::string>> rim;
    };
    std::vector<Block> pictures, frames;
};

TileData parse_tile_data(const std::string& text);

// Builds the tile set S from transcribed pictures and frames: all
// picture x frame x rotation combinations, deduplicated by wall-respecting
// isomorphism.  With validate set, checks |S| = 42, per-picture counts in
// {2,4}, and 2-degeneracy of every T and its full inversion.
TileCatalog build_tile_set_s(const TileData& data, bool validate = true,
                             std::string* error = nullptr);

struct FamilySequence {
    std::vector<int> tile_index;  // length 2m+1; odd positions are inverted
};

// Assembles the graph of one family sequence: cyclization of the
// right-inverted join of (T_0, inv T_1, T_2, ..., inv T_{2m-1}, T_2m).
Multigraph family_graph(const TileCatalog& cat, const FamilySequence& seq);

// Streams family members for the given m in lexicographic sequence order;
// when dedupe is set, only the first representative of each isomorphism
// class is emitted.  Return false from the callback to stop.
void enumerate_family(const TileCatalog& cat, int m, bool dedupe,
                      const std::function<bool(const FamilySequence&, const Multigraph&)>& emit);

}  // namespace crit
