#pragma once

#include <functional>
#include <optional>

#include "multigraph.hpp"

namespace crit {

// One catalog record: a candidate or verified graph with provenance.
struct CatalogEntry {
    std::string canon_sparse6;  // canonically labelled sparse6 form
    std::string source;         // family | sporadic-13 | sporadic-36 | four-k34star |
                                // search-v8free | user
    std::string verdict;        // k-critical | cr-too-low | non-critical-edge | cr1 |
                                // undecided
    int cr = -1;                // crossing number when known (cap 3)
    std::string witness;        // crossing pairs or bad edge, key=value free form
    std::string trace;          // provenance notes
};

// Append-only store keyed by canonical form, resumable via a processed ledger.
class CatalogStore {
public:
    explicit CatalogStore(const std::string& dir);
    bool already_processed(const std::string& key) const;
    void mark_processed(const std::string& key);
    void append(const CatalogEntry& e);
    std::vector<CatalogEntry> entries() const;
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
    std::set<std::string> processed_;
};

struct SearchOptions {
    long long budget_per_candidate = 50'000'000;
    int max_wheel_rim = 0;  // 0: use the derived bound
    bool verbose = false;
    int jobs = 1;
};

struct SearchStats {
    int small_candidates = 0;      // i4c non-planar graphs on <= 7 vertices
    int wheel_candidates = 0;      // bicycle wheels surviving the rim lemmas
    int covered_candidates = 0;    // 4-covered / 8-vertex p4c sweep survivors
    int emitted = 0;
    int undecided = 0;
    int derived_wheel_rim_bound = 0;
};

// The V8-free program: enumerates the internally-4-connected candidates in
// Robertson's classes (small, C3xC3, bicycle wheels, 4-covered), filters to
// crossing number 1 or 2-crossing-critical, applies peripherally-4-connected
// extensions and multiplicity grow-back, and records every verified
// 2-crossing-critical V8-free graph.
SearchStats search_v8free(CatalogStore& store, const SearchOptions& opt,
                          const std::function<void(const CatalogEntry&)>& on_emit = {});

// The rim-length bound for internally-4-connected bicycle wheels implied by
// the three pruning lemmas (no six consecutive x-only rim vertices; four
// common neighbours force six vertices; three alternations force six rim
// vertices).
int bicycle_wheel_rim_bound();

// All internally-4-connected non-planar bicycle wheels up to isomorphism
// satisfying the pruning lemmas.
std::vector<Multigraph> bicycle_wheel_candidates(int max_rim = 0);

}  // namespace crit
