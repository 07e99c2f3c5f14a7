#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "canonical.hpp"
#include "cleavage.hpp"
#include "crossing.hpp"
#include "graph_ops.hpp"
#include "named_graphs.hpp"
#include "planarity.hpp"
#include "testutil.hpp"

using namespace crit;

TEST_CASE("a 3-connected graph is its own cleavage unit") {
    auto dec = cleavage_units(petersen());
    REQUIRE(dec.units.size() == 1);
    CHECK(dec.units[0].kind == CleavageUnit::Kind::ThreeConnected);
    CHECK(isomorphic(dec.units[0].graph, petersen()));
}

TEST_CASE("a long cycle is its own cleavage unit") {
    Multigraph c;
    for (int i = 0; i < 6; ++i) c.add_edge(i, (i + 1) % 6);
    auto dec = cleavage_units(c);
    REQUIRE(dec.units.size() == 1);
    CHECK(dec.units[0].kind == CleavageUnit::Kind::Cycle);
}

TEST_CASE("two K5s sharing a doubled edge: two K5 units and a 4-bond") {
    // K5 on 0..4 and on {3,4,5,6,7}, with the shared edge 3-4 doubled (one
    // copy from each block)
    Multigraph g = complete(5);
    for (int i : {5, 6, 7}) {
        g.add_edge(3, i);
        g.add_edge(4, i);
    }
    g.add_edge(5, 6);
    g.add_edge(5, 7);
    g.add_edge(6, 7);
    g.add_edge(3, 4);  // second copy
    auto dec = cleavage_units(g);
    REQUIRE(dec.units.size() == 3);
    int k5 = 0, bond = 0;
    for (auto& u : dec.units) {
        if (u.kind == CleavageUnit::Kind::Bond) {
            CHECK(u.graph.m_total() == 4);
            ++bond;
        } else if (isomorphic(u.graph, complete(5)))
            ++k5;
    }
    CHECK(k5 == 2);
    CHECK(bond == 1);
}

TEST_CASE("gluing the decomposition reproduces the input") {
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 40) {
        Multigraph g = testutil::random_multigraph(rng, 9, 2, 0.45);
        if (g.n() < 3 || vertex_connectivity(g, 2).value < 2) continue;
        ++done;
        auto dec = cleavage_units(g);
        Multigraph glued = glue_units(dec);
        CHECK(isomorphic(glued, g));
        // planarity of g iff all units planar
        bool all_planar = true;
        for (auto& u : dec.units)
            if (!is_planar(u.graph)) all_planar = false;
        CHECK(all_planar == is_planar(g));
    }
}

TEST_CASE("the 13-list: sizes and pairwise distinct") {
    auto list = sporadic_13();
    CHECK(list.size() == 13);
    std::set<std::string> forms;
    for (auto& g : list) forms.insert(canonical_form(g));
    CHECK(forms.size() == 13);
}

TEST_CASE("the 36-list: 16 two-unit + 20 three-unit, pairwise distinct") {
    auto list = sporadic_36();
    CHECK(list.size() == 36);
    std::set<std::string> forms;
    for (auto& g : list) forms.insert(canonical_form(g));
    CHECK(forms.size() == 36);
    // all 2-connected but not 3-connected, with two non-planar cleavage units
    for (auto& g : list) {
        CHECK(vertex_connectivity(g, 3).value == 2);
        auto dec = cleavage_units(g);
        int np = 0;
        for (auto& u : dec.units)
            if (!is_planar(u.graph)) ++np;
        CHECK(np == 2);
    }
}

TEST_CASE("K34* contraction chain") {
    auto list = k34star_contractions();
    CHECK(list.size() == 4);
    CHECK(isomorphic(list[3], complete_bipartite(3, 4)));
    std::set<std::string> forms;
    for (auto& g : list) forms.insert(canonical_form(g));
    CHECK(forms.size() == 4);
}

TEST_CASE("sporadics verify 2-crossing-critical (sampled here, full in acceptance)") {
    auto l13 = sporadic_13();
    CHECK(is_k_crossing_critical(l13[0], 2).status ==
          CriticalityVerdict::Status::KCritical);
    CHECK(is_k_crossing_critical(l13[5], 2).status ==
          CriticalityVerdict::Status::KCritical);
    auto l36 = sporadic_36();
    CHECK(is_k_crossing_critical(l36[0], 2).status ==
          CriticalityVerdict::Status::KCritical);
    CHECK(is_k_crossing_critical(l36[20], 2).status ==
          CriticalityVerdict::Status::KCritical);
}

TEST_CASE("classification: one-point union of two K5s is in the 13-list") {
    Multigraph k5 = complete(5);
    Multigraph g = k5;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(5 + i, 5 + j);
    for (int i = 0; i < 4; ++i) g.add_edge(4, 5 + i);
    auto res = classify_non_3_connected(g);
    CHECK(res.kind == NonThreeConnectedClass::Kind::InThirteen);
}

TEST_CASE("classification: two type-3 units sharing a hinge is in the 36-list") {
    auto list = sporadic_36();
    // find the K33+K33-via-parts member by reconstruction: both units type 3
    // (K33 with virtual edge inside a part); glue two copies
    Multigraph a = complete_bipartite(3, 3);
    Multigraph b = complete_bipartite(3, 3);
    Multigraph g = a;
    std::map<int, int> f;
    int off = 10;
    for (int v : b.vertex_set()) f[v] = v == 0 ? 0 : (v == 1 ? 1 : v + off);
    for (auto [u, v, m] : b.edge_classes()) g.add_edge(f[u], f[v], m);
    auto res = classify_non_3_connected(g);
    CHECK(res.kind == NonThreeConnectedClass::Kind::InThirtySix);
}

TEST_CASE("digonal kernel and expansion round-trip") {
    // take a 3-connected 2-critical graph with a digon: K34* has none, so use
    // a family-style digon graph: the four contractions have no digons either;
    // build one: duplicate an edge of K34 is not critical -- instead test the
    // mechanism on a constructed example: kernel(expand(g)) == g
    Multigraph g = complete_bipartite(3, 4);
    g.add_edge(0, 3);  // make {0,3} a digon
    // expand the digon into a digonal path of length 3
    Multigraph e = expand_digons(g, {{0, 3, 3}});
    CHECK(e.n() == g.n() + 2);
    auto conn = vertex_connectivity(e, 3);
    CHECK(conn.value == 2);
    Multigraph k = digonal_kernel(e);
    CHECK(isomorphic(k, g));
    // kernel of an already 3-connected graph is itself
    CHECK(isomorphic(digonal_kernel(g), g));
    // expand with length 1 is the identity
    CHECK(expand_digons(g, {{0, 3, 1}}) == g);
}

TEST_CASE("digonal kernel output is 3-connected") {
    Multigraph g = complete_bipartite(3, 4);
    g.add_edge(0, 3);
    Multigraph e = expand_digons(g, {{0, 3, 4}});
    Multigraph k = digonal_kernel(e);
    CHECK(vertex_connectivity(k, 3).value >= 3);
}

// Lemma 14.2 instance: two non-planar cleavage units force cr >= 2.
TEST_CASE("two non-planar cleavage units give cr >= 2") {
    std::mt19937_64 rng(14);
    std::vector<Multigraph> nonplanar{complete(5), complete_bipartite(3, 3), petersen()};
    for (int it = 0; it < 30; ++it) {
        // glue two random non-planar blocks on a random hinge
        Multigraph a = nonplanar[rng() % nonplanar.size()];
        Multigraph b = nonplanar[rng() % nonplanar.size()];
        Multigraph g = a;
        int off = 50;
        auto bv = b.vertices();
        int u = (int)(rng() % a.n());
        int v = (u + 1 + (int)(rng() % (a.n() - 1))) % a.n();
        int bu = (int)(rng() % b.n());
        int bvx = (bu + 1 + (int)(rng() % (b.n() - 1))) % b.n();
        std::map<int, int> f;
        for (int w : b.vertex_set()) f[w] = w == bu ? u : (w == bvx ? v : w + off);
        for (auto [x, y, m] : b.edge_classes()) {
            if (Multigraph::key(f[x], f[y]) == Multigraph::key(u, v)) continue;
            g.add_edge(f[x], f[y], m);
        }
        CHECK_FALSE(cr_le(g, 1));
    }
}
