#include "named_graphs.hpp"

namespace crit {

Multigraph v2n(int n) {
    if (n < 2) throw std::invalid_argument("v2n requires n >= 2");
    Multigraph g;
    int N = 2 * n;
    for (int i = 0; i < N; ++i) {
        g.add_edge(i, (i + 1) % N);
        g.set_edge_tag(i, (i + 1) % N, "r" + std::to_string(i));
    }
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, n + i);
        g.set_edge_tag(i, n + i, "s" + std::to_string(i));
    }
    return g;
}

Multigraph complete(int n) {
    Multigraph g;
    g.add_vertices_upto(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph complete_bipartite(int a, int b) {
    Multigraph g;
    g.add_vertices_upto(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Multigraph petersen() {
    Multigraph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Multigraph q3() {
    Multigraph g;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    return g;
}

Multigraph q3_v() {
    Multigraph g = q3();
    // even-parity side: 0,3,5,6
    for (int v : {0, 3, 5, 6}) g.add_edge(8, v);
    return g;
}

Multigraph q3_2e() {
    Multigraph g = q3();
    g.add_edge(0, 7);  // two antipodal (bipartite-preserving) chords
    g.add_edge(3, 4);
    return g;
}

Multigraph q3_t() {
    Multigraph g = q3();
    // triangle on three even-parity vertices, plus the remaining even vertex
    // joined to its antipode
    g.add_edge(0, 3);
    g.add_edge(3, 5);
    g.add_edge(5, 0);
    g.add_edge(6, 1);
    return g;
}

Multigraph c3xc3() {
    Multigraph g;
    auto id = [](int i, int j) { return 3 * i + j; };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g.add_edge(id(i, j), id(i, (j + 1) % 3));
            g.add_edge(id(i, j), id((i + 1) % 3, j));
        }
    return g;
}

Multigraph k34_star() {
    // copy A: 2-side {0,1}, 3-side {2,3,4}; copy B: 2-side {5,6}, 3-side {7,8,9}
    Multigraph g;
    for (int t : {0, 1})
        for (int c : {2, 3, 4}) g.add_edge(t, c);
    for (int t : {5, 6})
        for (int c : {7, 8, 9}) g.add_edge(t, c);
    for (int j = 0; j < 3; ++j) g.add_edge(2 + j, 7 + j);
    return g;
}

std::vector<std::pair<int, int>> k34_star_matching() {
    return {{2, 7}, {3, 8}, {4, 9}};
}

Multigraph wheel(int rim) {
    Multigraph g;
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    return g;
}

Multigraph bicycle_wheel(int rim, const std::vector<int>& pattern) {
    if ((int)pattern.size() != rim) throw std::invalid_argument("pattern size != rim");
    Multigraph g;
    int x = rim, y = rim + 1;
    g.add_edge(x, y);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        if (pattern[i] & 1) g.add_edge(i, x);
        if (pattern[i] & 2) g.add_edge(i, y);
    }
    return g;
}

Multigraph named_graph(const std::string& name, const std::vector<int>& params) {
    if (name == "v2n") {
        if (params.size() != 1) throw std::invalid_argument("v2n needs n");
        return v2n(params[0]);
    }
    if (name == "k5") return complete(5);
    if (name == "k4") return complete(4);
    if (name == "k33") return complete_bipartite(3, 3);
    if (name == "k34") return complete_bipartite(3, 4);
    if (name == "k34star") return k34_star();
    if (name == "petersen") return petersen();
    if (name == "q3") return q3();
    if (name == "q3v") return q3_v();
    if (name == "q32e") return q3_2e();
    if (name == "q3t") return q3_t();
    if (name == "c3xc3") return c3xc3();
    if (name == "wheel") {
        if (params.size() != 1) throw std::invalid_argument("wheel needs rim size");
        return wheel(params[0]);
    }
    if (name == "bicycle") {
        if (params.size() < 2) throw std::invalid_argument("bicycle needs rim + pattern");
        std::vector<int> pat(params.begin() + 1, params.end());
        return bicycle_wheel(params[0], pat);
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

}  // namespace crit
