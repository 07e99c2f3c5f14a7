#include "search.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "canonical.hpp"
#include "crossing.hpp"
#include "formats.hpp"
#include "graph_ops.hpp"
#include "named_graphs.hpp"
#include "planarity.hpp"
#include "reduction.hpp"
#include "smallgen.hpp"
#include "subdivision.hpp"

namespace crit {

namespace fs = std::filesystem;

CatalogStore::CatalogStore(const std::string& dir) : dir_(dir) {
    fs::create_directories(dir_);
    std::ifstream in(dir_ + "/processed.txt");
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) processed_.insert(line);
}

bool CatalogStore::already_processed(const std::string& key) const {
    return processed_.count(key) != 0;
}

void CatalogStore::mark_processed(const std::string& key) {
    if (!processed_.insert(key).second) return;
    std::ofstream out(dir_ + "/processed.txt", std::ios::app);
    out << key << "\n";
}

void CatalogStore::append(const CatalogEntry& e) {
    std::ofstream out(dir_ + "/catalog.txt", std::ios::app);
    out << "graph=" << e.canon_sparse6 << " source=" << e.source
        << " verdict=" << e.verdict << " cr=" << e.cr << " witness=" << e.witness
        << " trace=" << e.trace << "\n";
}

std::vector<CatalogEntry> CatalogStore::entries() const {
    std::vector<CatalogEntry> out;
    std::ifstream in(dir_ + "/catalog.txt");
    std::string line;
    while (std::getline(in, line)) {
        CatalogEntry e;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
            if (k == "graph") e.canon_sparse6 = v;
            else if (k == "source") e.source = v;
            else if (k == "verdict") e.verdict = v;
            else if (k == "cr") e.cr = std::stoi(v);
            else if (k == "witness") e.witness = v;
            else if (k == "trace") e.trace = v;
        }
        out.push_back(e);
    }
    return out;
}

namespace {

std::string canon_s6(const Multigraph& g) {
    return encode_graph(canonical_copy(g), GraphFormat::Sparse6);
}

// pattern letters: 1 = spoke to x, 2 = spoke to y, 3 = both
bool pattern_ok(const std::vector<int>& pat) {
    int L = (int)pat.size();
    // no six consecutive rim vertices seeing only x (or only y)
    for (int side = 1; side <= 2; ++side) {
        int run = 0, maxrun = 0;
        for (int i = 0; i < 2 * L; ++i) {
            if (pat[i % L] == side)
                ++run;
            else
                run = 0;
            maxrun = std::max(maxrun, std::min(run, L));
        }
        if (maxrun >= 6) return false;
    }
    // at most three vertices adjacent to both (when the rim is longer than 4)
    int both = 0;
    for (int p : pat)
        if (p == 3) ++both;
    if (L > 4 && both >= 4) return false;
    // no three x/y alternations when the rim is longer than 6: look for six
    // positions p1<q1<p2<q2<p3<q3 cyclically with p's seeing x, q's seeing y
    if (L > 6) {
        // dp over starting offset: greedily find x,y,x,y,x,y in order
        for (int s = 0; s < L; ++s) {
            int need = 0;  // alternation stage: even -> want x, odd -> want y
            for (int i = 0; i < L && need < 6; ++i) {
                int p = pat[(s + i) % L];
                bool sees_x = p & 1, sees_y = p & 2;
                if (need % 2 == 0 && sees_x)
                    ++need;
                else if (need % 2 == 1 && sees_y)
                    ++need;
            }
            if (need >= 6) return false;
        }
    }
    return true;
}

// longest x,y,x,y,... alternating subsequence stage reachable in the linear
// prefix; a linear 6-stage alternation already implies the cyclic one
struct AltState {
    int stage_x = 0;  // stages achieved starting with an x-seer
    int stage_y = 0;
    void feed(int letter) {
        bool x = letter & 1, y = letter & 2;
        if (stage_x % 2 == 0 ? x : y) ++stage_x;
        if (stage_y % 2 == 0 ? y : x) ++stage_y;
    }
    bool dead() const { return stage_x >= 6 || stage_y >= 6; }
};

}  // namespace

int bicycle_wheel_rim_bound() {
    // largest rim length admitting any pattern that survives the lemmas;
    // beyond it the class is empty.  DFS with prefix pruning on runs, the
    // both-count, and the linear alternation stage.
    int best = 6;
    for (int L = 7; L <= 30; ++L) {
        std::vector<int> pat(L);
        std::function<bool(int, int, int, int, AltState)> rec =
            [&](int i, int run_letter, int run_len, int both, AltState alt) -> bool {
            if (i == L) return pattern_ok(pat);
            for (int v : {1, 2, 3}) {
                int nb = both + (v == 3 ? 1 : 0);
                if (nb > 3) continue;
                int nrl = v == run_letter ? run_len + 1 : 1;
                if (v != 3 && nrl >= 6) continue;
                AltState a2 = alt;
                a2.feed(v);
                if (a2.dead()) continue;
                pat[i] = v;
                if (rec(i + 1, v, nrl, nb, a2)) return true;
            }
            return false;
        };
        if (rec(0, 0, 0, 0, {}))
            best = L;
        else
            break;
    }
    return best;
}

std::vector<Multigraph> bicycle_wheel_candidates(int max_rim) {
    if (max_rim <= 0) max_rim = bicycle_wheel_rim_bound();
    std::vector<Multigraph> out;
    std::set<std::string> seen;
    for (int L = 3; L <= max_rim; ++L) {
        std::vector<int> pat(L);
        auto min_rotation = [&]() {
            // only process the lexicographically least rotation/reflection
            for (int s = 0; s < L; ++s)
                for (int dir : {1, -1}) {
                    if (s == 0 && dir == 1) continue;
                    for (int i = 0; i < L; ++i) {
                        int j = ((s + dir * i) % L + L) % L;
                        if (pat[j] != pat[i]) {
                            if (pat[j] < pat[i]) return false;
                            break;
                        }
                    }
                }
            return true;
        };
        std::function<void(int, int, int, int, AltState)> rec =
            [&](int i, int run_letter, int run_len, int both, AltState alt) {
            if (i == L) {
                if (!min_rotation() || !pattern_ok(pat)) return;
                Multigraph g = bicycle_wheel(L, pat);
                if (is_planar(g)) return;
                if (!is_internally_4_connected(g)) return;
                std::string cf = canonical_form(g);
                if (seen.insert(cf).second) out.push_back(g);
                return;
            }
            for (int v : {1, 2, 3}) {
                int nb = both + (v == 3 ? 1 : 0);
                if (L > 4 && nb > 3) continue;
                int nrl = v == run_letter ? run_len + 1 : 1;
                if (L > 6 && v != 3 && nrl >= 6) continue;
                AltState a2 = alt;
                a2.feed(v);
                if (L > 6 && a2.dead()) continue;
                pat[i] = v;
                rec(i + 1, v, nrl, nb, a2);
            }
        };
        rec(0, 0, 0, 0, {});
    }
    return out;
}

namespace {

struct GrowBack {
    const Multigraph& base;
    long long budget;
    long long used = 0;
    std::function<void(const Multigraph&, const std::string&)> emit;
    bool exhausted = false;

    // Multiplicity choices: double edge subsets in increasing popcount order
    // (doubling uv encodes u in T_v and v in T_u).  Where a degree-3 vertex
    // ends up with all three edges doubled, also try the doglike replacement
    // with each nose.  Budget caps the sweep.
    // visits masks in increasing popcount order without materializing them
    template <typename F>
    void over_masks(int m, F f) {
        if (f(0)) return;
        for (int k = 1; k <= m; ++k) {
            unsigned mask = (1u << k) - 1;
            while (mask < (1u << m)) {
                if (f((int)mask)) return;
                unsigned c = mask & -mask, r = mask + c;  // Gosper's hack
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
    }

    void run() {
        auto edges = base.edge_classes();
        int m = (int)edges.size();
        if (m > 30) {
            exhausted = true;
            return;
        }
        Multigraph dogvv;
        {
            dogvv.add_edge(3, 4);
            dogvv.add_edge(3, 0);
            dogvv.add_edge(4, 0);
            dogvv.add_edge(3, 1, 2);
            dogvv.add_edge(4, 2, 2);
        }
        over_masks(m, [&](int mask) -> bool {
            if (++used > budget) {
                exhausted = true;
                return true;
            }
            Multigraph g = base;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i))
                    g.add_edge(std::get<0>(edges[i]), std::get<1>(edges[i]));
            std::ostringstream trace;
            trace << "double-mask=" << mask;
            emit(g, trace.str());
            // doglike option for fully doubled degree-3 vertices
            for (int v : base.vertex_set()) {
                if (base.simple_degree(v) != 3) continue;
                auto nb = g.neighbours(v);
                bool all2 = true;
                for (int t : nb)
                    if (g.edge_mult(v, t) != 2) all2 = false;
                if (!all2) continue;
                for (int nose = 0; nose < 3; ++nose) {
                    if (++used > budget) {
                        exhausted = true;
                        return true;
                    }
                    TUConfiguration dog;
                    dog.name = "dog-vv";
                    dog.h = dogvv;
                    dog.x = nose == 0 ? 0 : (nose == 1 ? 1 : 2);
                    dog.y = nose == 0 ? 1 : (nose == 1 ? 0 : 1);
                    dog.z = nose == 0 ? 2 : (nose == 1 ? 2 : 0);
                    // wall degree check happens inside; x wall must be the
                    // one with two single edges
                    try {
                        Multigraph g2 = substitute_configuration(g, v, dog);
                        std::ostringstream tr2;
                        tr2 << "double-mask=" << mask << " dog-at=" << v
                            << " nose=" << nose;
                        emit(g2, tr2.str());
                    } catch (const std::invalid_argument&) {
                    }
                }
            }
            return false;
        });
    }
};

}  // namespace

SearchStats search_v8free(CatalogStore& store, const SearchOptions& opt,
                          const std::function<void(const CatalogEntry&)>& on_emit) {
    SearchStats stats;
    std::set<std::string> emitted_forms;

    auto record = [&](const Multigraph& g, const std::string& source,
                      const std::string& trace) {
        std::string key = canon_s6(g);
        if (store.already_processed(key)) return;
        store.mark_processed(key);
        CatalogEntry e;
        e.canon_sparse6 = key;
        e.source = source;
        e.trace = trace;
        // V8-freeness gate
        if (!v2n_free(g, 4)) return;
        auto cn = crossing_number(g, 3);
        e.cr = cn.exceeds_cap ? 4 : cn.value;
        if (cn.value <= 1) {
            e.verdict = cn.value == 1 ? "cr1" : "planar";
        } else {
            auto verd = is_k_crossing_critical(g, 2);
            switch (verd.status) {
                case CriticalityVerdict::Status::KCritical: e.verdict = "k-critical"; break;
                case CriticalityVerdict::Status::CrTooLow: e.verdict = "cr-too-low"; break;
                case CriticalityVerdict::Status::NonCriticalEdge: {
                    e.verdict = "non-critical-edge";
                    std::ostringstream w;
                    w << verd.bad_edge->first << "-" << verd.bad_edge->second;
                    e.witness = w.str();
                    break;
                }
                default: e.verdict = "degenerate";
            }
        }
        store.append(e);
        ++stats.emitted;
        if (on_emit) on_emit(e);
    };

    // candidate base graphs in Robertson's classes
    struct Candidate {
        Multigraph g;
        std::string cls;
    };
    std::vector<Candidate> candidates;

    // (1) internally-4-connected non-planar graphs with at most 7 vertices
    for (int n = 5; n <= 7; ++n)
        for (auto& g : all_graphs_min_degree3(n)) {
            if (is_planar(g)) continue;
            if (!is_internally_4_connected(g)) continue;
            candidates.push_back({g, "small7"});
            ++stats.small_candidates;
        }
    // (2) C3 box C3
    candidates.push_back({c3xc3(), "c3xc3"});
    // (3) bicycle wheels surviving the rim lemmas
    stats.derived_wheel_rim_bound = opt.max_wheel_rim > 0 ? opt.max_wheel_rim
                                                          : bicycle_wheel_rim_bound();
    for (auto& g : bicycle_wheel_candidates(stats.derived_wheel_rim_bound)) {
        candidates.push_back({g, "bicycle"});
        ++stats.wheel_candidates;
    }
    // (4) 4-covered: the three cube variants plus the 8-vertex p4c sweep
    candidates.push_back({q3_v(), "q3v"});
    candidates.push_back({q3_2e(), "q32e"});
    candidates.push_back({q3_t(), "q3t"});
    for (auto& g : all_graphs_min_degree3(8)) {
        if (is_planar(g)) continue;
        if (!is_peripherally_4_connected(g)) continue;
        candidates.push_back({g, "p4c8"});
        ++stats.covered_candidates;
    }

    // pipeline per candidate: itself, then p4c extensions, then grow-back
    for (auto& cand : candidates) {
        std::string base_key = "base:" + canon_s6(cand.g);
        if (store.already_processed(base_key)) continue;
        // candidate filter: keep when cr = 1 or 2-crossing-critical
        auto cn = crossing_number(cand.g, 3);
        bool keep = cn.value == 1;
        if (!keep && cn.value >= 2)
            keep = is_k_crossing_critical(cand.g, 2).status ==
                   CriticalityVerdict::Status::KCritical;
        if (!keep) {
            store.mark_processed(base_key);
            continue;
        }
        std::vector<Multigraph> bases{cand.g};
        if (is_internally_4_connected(cand.g))
            for (auto& e : p4c_extensions(cand.g, 64))
                if (!(e == cand.g)) bases.push_back(e);
        for (auto& b : bases) {
            GrowBack gb{b, opt.budget_per_candidate / std::max<size_t>(bases.size(), 1),
                        0,
                        [&](const Multigraph& g, const std::string& tr) {
                            record(g, cand.cls, tr);
                        },
                        false};
            gb.run();
            if (gb.exhausted) {
                CatalogEntry e;
                e.canon_sparse6 = canon_s6(b);
                e.source = cand.cls;
                e.verdict = "undecided";
                e.trace = "grow-back budget exhausted";
                store.append(e);
                ++stats.undecided;
            }
        }
        store.mark_processed(base_key);
    }
    return stats;
}

}  // namespace crit
