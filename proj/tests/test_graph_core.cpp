#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "canonical.hpp"
#include "formats.hpp"
#include "graph_ops.hpp"
#include "named_graphs.hpp"
#include "testutil.hpp"

using namespace crit;

TEST_CASE("graph6 decodes K5 from D~{") {
    Multigraph g = decode_graph("D~{", GraphFormat::Graph6);
    CHECK(g.n() == 5);
    CHECK(g.m_total() == 10);
    CHECK(isomorphic(g, complete(5)));
    CHECK(encode_graph(complete(5), GraphFormat::Graph6) == "D~{");
}

TEST_CASE("edgelist digon and 1-vertex graphs") {
    Multigraph g = decode_graph("n=2\n0-1 x2\n", GraphFormat::EdgeList);
    CHECK(g.n() == 2);
    CHECK(g.edge_mult(0, 1) == 2);
    Multigraph h = decode_graph("n=1\n", GraphFormat::EdgeList);
    CHECK(h.n() == 1);
    CHECK(h.m() == 0);
}

TEST_CASE("graph6 rejects multigraphs") {
    Multigraph g;
    g.add_edge(0, 1, 2);
    CHECK_THROWS(encode_graph(g, GraphFormat::Graph6));
}

TEST_CASE("malformed input reports byte offsets") {
    CHECK_THROWS_AS(decode_graph("n=x", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(decode_graph("", GraphFormat::Sparse6), ParseError);
    CHECK_THROWS_AS(decode_graph("D\x01", GraphFormat::Graph6), ParseError);
}

TEST_CASE("sparse6/edgelist round-trip on random multigraphs") {
    std::mt19937_64 rng(20260810);
    for (int it = 0; it < 1000; ++it) {
        Multigraph g = testutil::random_multigraph(rng, 12, 2);
        for (auto fmt : {GraphFormat::Sparse6, GraphFormat::EdgeList}) {
            std::string enc = encode_graph(g, fmt);
            Multigraph h = decode_graph(enc, fmt);
            auto [gc, go] = g.compact();
            CHECK(h == gc);
            CHECK(encode_graph(h, fmt) == enc);  // bit-exact second trip
        }
    }
}

TEST_CASE("canonical form is relabelling-invariant") {
    std::mt19937_64 rng(42);
    std::vector<Multigraph> gs = {complete(5), complete_bipartite(3, 3), petersen(),
                                  q3(), v2n(4)};
    for (int it = 0; it < 10; ++it) gs.push_back(testutil::random_multigraph(rng, 9, 2));
    for (auto& g : gs) {
        std::string cf = canonical_form(g);
        for (int it = 0; it < 100; ++it)
            CHECK(canonical_form(testutil::random_relabel(rng, g)) == cf);
    }
}

TEST_CASE("canonical form separates multiplicities") {
    Multigraph digon, single;
    digon.add_edge(0, 1, 2);
    single.add_edge(0, 1);
    CHECK(canonical_form(digon) != canonical_form(single));
}

TEST_CASE("V4 is K4 and V6 is K_{3,3}") {
    CHECK(isomorphic(v2n(2), complete(4)));
    CHECK(isomorphic(v2n(3), complete_bipartite(3, 3)));
}

TEST_CASE("suppress_degree_two recovers K4 from a subdivision") {
    Multigraph g = complete(4);
    // subdivide edge 0-1 with new vertex 4
    g.remove_edge_all(0, 1);
    g.add_edge(0, 4);
    g.add_edge(4, 1);
    Multigraph h = suppress_degree_two(g);
    CHECK(isomorphic(h, complete(4)));
}

TEST_CASE("suppression turns twin paths into a digon") {
    // triangle {0,1,2}; vertex 3 joined to 0 and 1 via paths of length 2
    Multigraph g;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 4);
    g.add_edge(4, 3);
    g.add_edge(0, 5);
    g.add_edge(5, 3);
    g.add_edge(3, 1);
    Multigraph h = suppress_degree_two(g);
    CHECK(h.edge_mult(0, 3) == 2);
}

TEST_CASE("suppression: identity on min degree 3, error on cycles") {
    Multigraph g = petersen();
    CHECK(suppress_degree_two(g) == g);
    Multigraph c;
    c.add_edge(0, 1);
    c.add_edge(1, 2);
    c.add_edge(2, 0);
    CHECK_THROWS(suppress_degree_two(c));
}

TEST_CASE("suppression is idempotent and preserves degrees >= 3") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        Multigraph g = testutil::random_multigraph(rng, 10, 2);
        Multigraph h;
        try {
            h = suppress_degree_two(g);
        } catch (const std::invalid_argument&) {
            continue;
        }
        CHECK(suppress_degree_two(h) == h);
        std::multiset<int> before, after;
        for (int v : g.vertex_set())
            if (g.degree(v) >= 3) before.insert(g.degree(v));
        for (int v : h.vertex_set())
            if (h.degree(v) >= 3) after.insert(h.degree(v));
        CHECK(before == after);
    }
}

TEST_CASE("suppression order-independence") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 100; ++it) {
        Multigraph g = testutil::random_multigraph(rng, 10, 2);
        Multigraph r = testutil::random_relabel(rng, g);
        bool gthrew = false, rthrew = false;
        Multigraph hg, hr;
        try {
            hg = suppress_degree_two(g);
        } catch (const std::invalid_argument&) {
            gthrew = true;
        }
        try {
            hr = suppress_degree_two(r);
        } catch (const std::invalid_argument&) {
            rthrew = true;
        }
        CHECK(gthrew == rthrew);
        if (!gthrew) CHECK(canonical_form(hg) == canonical_form(hr));
    }
}

TEST_CASE("vertex connectivity basics") {
    auto k5 = vertex_connectivity(complete(5), 4);
    CHECK(k5.value == 4);
    auto k5c3 = vertex_connectivity(complete(5), 3);
    CHECK(k5c3.exceeds_cap);

    // two K5 blocks sharing one vertex
    Multigraph g = complete(5);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(5 + i, 5 + j);
    for (int i = 0; i < 4; ++i) g.add_edge(4, 5 + i);
    auto r = vertex_connectivity(g, 4);
    CHECK(r.value == 1);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->vertices == std::vector<int>{4});

    CHECK(vertex_connectivity(v2n(5), 4).value == 3);  // V10 brute-forced
    Multigraph disc;
    disc.add_vertex(0);
    disc.add_vertex(1);
    CHECK(vertex_connectivity(disc, 4).value == 0);
}

TEST_CASE("peripheral 4-connectivity") {
    CHECK(is_peripherally_4_connected(complete(5)));
    CHECK(is_peripherally_4_connected(complete_bipartite(3, 3)));

    // two K4's sharing a triangle: each side one vertex
    Multigraph g;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) g.add_edge(i, j);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(3, i);
        g.add_edge(4, i);
    }
    CHECK(is_peripherally_4_connected(g));

    // two 5-wheels glued on a 3-cut of the rim path: a 3-cut with a big side
    Multigraph w;
    // wheel 1: hub 0, rim 1-2-3-4-5
    for (int i = 1; i <= 5; ++i) {
        w.add_edge(0, i);
        w.add_edge(i, i == 5 ? 1 : i + 1);
    }
    // wheel 2: hub 6, rim 1-2-3-7-8 (sharing rim path 1,2,3)
    w.add_edge(6, 1);
    w.add_edge(6, 2);
    w.add_edge(6, 3);
    w.add_edge(6, 7);
    w.add_edge(6, 8);
    w.add_edge(3, 7);
    w.add_edge(7, 8);
    w.add_edge(8, 1);
    CutWitness cw;
    CHECK_FALSE(is_peripherally_4_connected(w, &cw));
}

TEST_CASE("hugs") {
    auto k4hugs = find_hugs(complete(4));
    std::set<std::pair<int, int>> hug_edges;
    for (auto& h : k4hugs)
        if (h.kind != Hug::Kind::SimultaneousPair) hug_edges.insert(h.edge);
    CHECK(hug_edges.size() == 6);  // every edge of K4 is a hug

    CHECK(find_hugs(c3xc3()).empty());  // all degrees 4: no heads
}

TEST_CASE("bear hug figure: {ux,uy} simultaneously deletable without uw") {
    // fg:bearHug: hug ux with head v (N(v)={u,x,z}), hug uy with head t
    // (N(t)={u,y,w}), N(u)={x,y,v,t}, dashed uw absent.
    Multigraph g;
    int u = 0, x = 1, y = 2, v = 3, t = 4, w = 5, z = 6;
    g.add_edge(u, x);
    g.add_edge(u, y);
    g.add_edge(u, v);
    g.add_edge(u, t);
    g.add_edge(v, x);
    g.add_edge(v, z);
    g.add_edge(t, y);
    g.add_edge(t, w);
    g.add_edge(x, w);
    g.add_edge(y, z);
    g.add_edge(w, z);
    auto hugs = find_hugs(g);
    bool pair_found = false;
    for (auto& h : hugs) {
        if (h.kind != Hug::Kind::SimultaneousPair) continue;
        std::set<std::pair<int, int>> es{h.edge, h.partner};
        if (es == std::set<std::pair<int, int>>{{u, x}, {u, y}}) pair_found = true;
    }
    CHECK(pair_found);
}

TEST_CASE("contract_set") {
    // contracting one matching edge of K34* keeps 2-connectivity and drops to 9 vertices
    Multigraph g = k34_star();
    Multigraph h = contract_set(g, {2, 7});
    CHECK(h.n() == 9);
    // contract a single vertex: identity
    CHECK(contract_set(g, {0}) == g);
    // contract all of K5: single vertex, no edges
    Multigraph k5 = complete(5);
    Multigraph one = contract_set(k5, {0, 1, 2, 3, 4});
    CHECK(one.n() == 1);
    CHECK(one.m() == 0);
    // disconnected set rejected
    CHECK_THROWS(contract_set(k5, std::set<int>{}));
    Multigraph two;
    two.add_vertex(0);
    two.add_vertex(1);
    two.add_edge(0, 1);
    two.add_vertex(2);
    two.add_edge(1, 2);
    CHECK_THROWS(contract_set(two, std::set<int>{0, 2}));
}

TEST_CASE("named graph constructors have the right sizes") {
    CHECK(k34_star().n() == 10);
    CHECK(k34_star().m_total() == 15);  // 12 + 3
    Multigraph contracted = k34_star();
    for (auto [a, b] : k34_star_matching()) contracted = contract_set(contracted, {a, b});
    CHECK(isomorphic(contracted, complete_bipartite(3, 4)));
    CHECK(q3().n() == 8);
    CHECK(q3().m_total() == 12);
    CHECK(q3_v().n() == 9);
    CHECK(q3_2e().m_total() == 14);
    CHECK(q3_t().m_total() == 16);
    CHECK(c3xc3().n() == 9);
    CHECK(c3xc3().m_total() == 18);
    CHECK(petersen().n() == 10);
    Multigraph bw = bicycle_wheel(6, {1, 2, 1, 2, 1, 2});
    CHECK(bw.n() == 8);
    CHECK(bw.degree(6) == 4);  // axle x: 3 spokes + axle edge
    CHECK_THROWS(named_graph("nosuch"));
    CHECK_THROWS(v2n(1));
}
