#include "formats.hpp"

#include <cctype>
#include <sstream>

namespace crit {

namespace {

void append_number(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6/sparse6");
    }
}

int read_number(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw ParseError("truncated header", pos);
    unsigned char c = s[pos];
    if (c == 126) {
        if (pos + 3 >= s.size()) throw ParseError("truncated extended header", pos);
        if ((unsigned char)s[pos + 1] == 126)
            throw ParseError("graph too large", pos);
        int n = 0;
        for (int i = 1; i <= 3; ++i) {
            unsigned char d = s[pos + i];
            if (d < 63 || d > 126) throw ParseError("bad header byte", pos + i);
            n = (n << 6) | (d - 63);
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw ParseError("bad header byte", pos);
    pos += 1;
    return c - 63;
}

struct BitWriter {
    std::string data;
    int nbits = 0;
    void push(int bit) {
        if (nbits % 6 == 0) data.push_back(63);
        int shift = 5 - nbits % 6;
        data.back() = char((data.back() - 63) | (bit << shift)) + 63;
        ++nbits;
    }
    void push_value(unsigned val, int width) {
        for (int i = width - 1; i >= 0; --i) push((val >> i) & 1);
    }
};

struct BitReader {
    const std::string& s;
    size_t base;
    size_t bit = 0;
    BitReader(const std::string& str, size_t start) : s(str), base(start) {}
    size_t bits_left() const { return (s.size() - base) * 6 - bit; }
    int next() {
        size_t byte = base + bit / 6;
        if (byte >= s.size()) throw ParseError("truncated bit stream", byte);
        unsigned char c = s[byte];
        if (c < 63 || c > 126) throw ParseError("bad data byte", byte);
        int shift = 5 - bit % 6;
        ++bit;
        return ((c - 63) >> shift) & 1;
    }
    unsigned next_value(int width) {
        unsigned v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | next();
        return v;
    }
};

int bits_for(int n) {
    // bits needed to represent n-1, minimum 1
    int k = 1;
    while ((1 << k) < n) ++k;
    return k;
}

std::string encode_graph6(const Multigraph& g) {
    for (auto [u, v, m] : g.edge_classes())
        if (m > 1) throw std::invalid_argument("graph6 cannot encode multigraphs");
    auto [c, order] = g.compact();
    int n = c.n();
    std::string out;
    append_number(out, n);
    BitWriter bw;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bw.push(c.has_edge(i, j) ? 1 : 0);
    while (bw.nbits % 6 != 0) bw.push(0);
    out += bw.data;
    return out;
}

Multigraph decode_graph6(const std::string& s) {
    size_t pos = 0;
    int n = read_number(s, pos);
    Multigraph g;
    g.add_vertices_upto(n);
    BitReader br(s, pos);
    size_t need = (size_t)n * (n - 1) / 2;
    if (br.bits_left() < need) throw ParseError("graph6 bit stream too short", s.size());
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (br.next()) g.add_edge(i, j);
    return g;
}

std::string encode_sparse6(const Multigraph& g) {
    auto [c, order] = g.compact();
    int n = c.n();
    std::string out = ":";
    append_number(out, n);
    int k = bits_for(n);
    BitWriter bw;
    // edges sorted by larger endpoint: the decoder's current vertex only
    // moves forward
    std::vector<std::pair<int, int>> inst;  // (max, min) per parallel copy
    for (auto [u, w, m] : c.edge_classes())
        for (int copy = 0; copy < m; ++copy) inst.push_back({w, u});
    std::sort(inst.begin(), inst.end());
    int v = 0;
    for (auto [w, u] : inst) {
        if (w == v) {
            bw.push(0);
            bw.push_value(u, k);
        } else if (w == v + 1) {
            bw.push(1);
            bw.push_value(u, k);
            v = w;
        } else {
            bw.push(0);
            bw.push_value(w, k);
            v = w;
            bw.push(0);
            bw.push_value(u, k);
        }
    }
    // padding, with the power-of-two special case
    int pad = (6 - bw.nbits % 6) % 6;
    if (k < 6 && n == (1 << k) && pad >= k && v < n - 1 && pad > 0) {
        bw.push(0);
        pad -= 1;
    }
    for (int i = 0; i < pad; ++i) bw.push(1);
    out += bw.data;
    return out;
}

Multigraph decode_sparse6(const std::string& s) {
    if (s.empty() || s[0] != ':') throw ParseError("sparse6 must start with ':'", 0);
    size_t pos = 1;
    int n = read_number(s, pos);
    Multigraph g;
    g.add_vertices_upto(n);
    int k = bits_for(n);
    BitReader br(s, pos);
    long long v = 0;
    while (br.bits_left() >= (size_t)(1 + k)) {
        int b = br.next();
        unsigned x = br.next_value(k);
        if (b == 1) v += 1;
        if ((long long)x >= n || v >= n) break;
        if ((long long)x > v)
            v = x;
        else
            g.add_edge((int)x, (int)v);
    }
    return g;
}

std::string encode_edgelist(const Multigraph& g) {
    auto [c, order] = g.compact();
    std::ostringstream out;
    out << "n=" << c.n() << "\n";
    for (auto [u, v, m] : c.edge_classes()) {
        out << u << "-" << v;
        if (m > 1) out << " x" << m;
        out << "\n";
    }
    return out.str();
}

Multigraph decode_edgelist(const std::string& s) {
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    };
    skip_ws();
    if (s.compare(pos, 2, "n=") != 0) throw ParseError("expected n= header", pos);
    pos += 2;
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw ParseError("expected vertex count", pos);
    int n = std::stoi(s.substr(start, pos - start));
    Multigraph g;
    g.add_vertices_upto(n);
    auto read_int = [&]() {
        size_t st = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == st) throw ParseError("expected number", pos);
        return std::stoi(s.substr(st, pos - st));
    };
    while (true) {
        skip_ws();
        if (pos >= s.size()) break;
        int u = read_int();
        if (pos >= s.size() || s[pos] != '-') throw ParseError("expected '-'", pos);
        ++pos;
        int v = read_int();
        int mult = 1;
        size_t save = pos;
        skip_ws();
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            mult = read_int();
        } else {
            pos = save;
        }
        if (u >= n || v >= n) throw ParseError("vertex id out of range", save);
        if (u == v) throw ParseError("self-loop not allowed", save);
        if (mult < 1) throw ParseError("multiplicity must be >= 1", save);
        g.add_edge(u, v, mult);
    }
    return g;
}

}  // namespace

Multigraph decode_graph(const std::string& text, GraphFormat fmt) {
    // strip a trailing newline, common in graph files
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    switch (fmt) {
        case GraphFormat::Graph6: return decode_graph6(s);
        case GraphFormat::Sparse6: return decode_sparse6(s);
        case GraphFormat::EdgeList: return decode_edgelist(text);
    }
    throw std::invalid_argument("unknown format");
}

std::string encode_graph(const Multigraph& g, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::Graph6: return encode_graph6(g);
        case GraphFormat::Sparse6: return encode_sparse6(g);
        case GraphFormat::EdgeList: return encode_edgelist(g);
    }
    throw std::invalid_argument("unknown format");
}

GraphFormat guess_format(const std::string& text) {
    size_t p = 0;
    while (p < text.size() && std::isspace((unsigned char)text[p])) ++p;
    if (p < text.size() && text[p] == ':') return GraphFormat::Sparse6;
    if (text.compare(p, 2, "n=") == 0) return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

}  // namespace crit
