#include "tiles.hpp"

#include <sstream>

#include "canonical.hpp"
#include "graph_ops.hpp"
#include "planarity.hpp"

namespace crit {

void check_tile(const Tile& t) {
    std::set<int> seen;
    for (int v : t.left) {
        if (!t.g.has_vertex(v)) throw std::invalid_argument("wall vertex not in graph");
        if (!seen.insert(v).second) throw std::invalid_argument("wall vertices not distinct");
    }
    for (int v : t.right) {
        if (!t.g.has_vertex(v)) throw std::invalid_argument("wall vertex not in graph");
        if (!seen.insert(v).second) throw std::invalid_argument("walls intersect");
    }
}

Tile tile_join(const Tile& a, const Tile& b) {
    if (a.right.size() != b.left.size())
        throw std::invalid_argument("tile_join: incompatible walls");
    check_tile(a);
    check_tile(b);
    // relabel b: left wall onto a.right, everything else fresh
    std::map<int, int> f;
    for (size_t i = 0; i < b.left.size(); ++i) f[b.left[i]] = a.right[i];
    int next = std::max(a.g.fresh_vertex_id(), b.g.fresh_vertex_id());
    for (int v : b.g.vertex_set())
        if (!f.count(v)) f[v] = next++;
    Multigraph bg = b.g.relabelled(f);
    Tile out;
    out.g = a.g;
    for (int v : bg.vertex_set()) out.g.add_vertex(v);
    for (auto [u, v, m] : bg.edge_classes()) out.g.add_edge(u, v, m);
    for (auto& [k, tag] : bg.edge_tags()) out.g.set_edge_tag(k.first, k.second, tag);
    out.left = a.left;
    out.right.clear();
    for (int v : b.right) out.right.push_back(f[v]);
    return out;
}

Tile tile_transform(const Tile& t, TileOp op) {
    Tile out = t;
    switch (op) {
        case TileOp::RightInvert:
            std::reverse(out.right.begin(), out.right.end());
            break;
        case TileOp::LeftInvert:
            std::reverse(out.left.begin(), out.left.end());
            break;
        case TileOp::Invert:
            std::reverse(out.left.begin(), out.left.end());
            std::reverse(out.right.begin(), out.right.end());
            break;
        case TileOp::Reverse:
            std::swap(out.left, out.right);
            break;
    }
    return out;
}

Multigraph tile_cyclize(const Tile& t) {
    if (t.left.size() != t.right.size())
        throw std::invalid_argument("cyclize: wall length mismatch");
    std::map<int, int> f;
    for (int v : t.g.vertex_set()) f[v] = v;
    for (size_t i = 0; i < t.left.size(); ++i) {
        if (t.g.has_edge(t.left[i], t.right[i]))
            throw std::invalid_argument("cyclize: identification would create a loop");
        f[t.right[i]] = t.left[i];
    }
    return t.g.relabelled(f);
}

Multigraph tile_frame_graph(const Tile& t) {
    check_tile(t);
    Multigraph h = t.g;
    int corner_a = h.fresh_vertex_id();
    int corner_b = corner_a + 1;
    int apex = corner_a + 2;
    h.add_vertex(corner_a);
    h.add_vertex(corner_b);
    h.add_vertex(apex);
    std::vector<int> cycle;
    cycle.push_back(corner_a);
    for (int v : t.left) cycle.push_back(v);
    cycle.push_back(corner_b);
    for (auto it = t.right.rbegin(); it != t.right.rend(); ++it) cycle.push_back(*it);
    for (size_t i = 0; i < cycle.size(); ++i)
        h.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    for (int v : cycle) h.add_edge(apex, v);
    return h;
}

bool tcr_le(const Tile& t, int m, CrossingConfiguration* witness) {
    if (is_planar(tile_frame_graph(t))) {
        if (witness) *witness = {};
        return true;
    }
    if (m <= 0) return false;
    std::vector<EdgeInstance> inst;
    for (auto [u, v, mm] : t.g.edge_classes())
        for (int c = 0; c < mm; ++c) inst.push_back({u, v, c});
    std::vector<std::pair<EdgeInstance, EdgeInstance>> cand;
    for (size_t i = 0; i < inst.size(); ++i)
        for (size_t j = i + 1; j < inst.size(); ++j) {
            auto& a = inst[i];
            auto& b = inst[j];
            bool adj = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (!adj) cand.push_back({a, b});
        }
    // enumerate subsets of pairs of size 1..m, instances used <= 2 times
    std::vector<int> chosen;
    std::map<EdgeInstance, int> used;
    std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
        if (remaining == 0) {
            CrossingConfiguration cfg;
            for (int i : chosen) cfg.pairs.push_back(cand[i]);
            std::vector<EdgeInstance> doubled;
            for (auto& [e, c] : used)
                if (c == 2) doubled.push_back(e);
            for (int mask = 0; mask < (1 << (int)doubled.size()); ++mask) {
                cfg.orders.clear();
                for (size_t d = 0; d < doubled.size(); ++d) {
                    std::vector<int> idx;
                    for (int p = 0; p < (int)cfg.pairs.size(); ++p)
                        if (cfg.pairs[p].first == doubled[d] ||
                            cfg.pairs[p].second == doubled[d])
                            idx.push_back(p);
                    cfg.orders.push_back(
                        {doubled[d], (mask >> d) & 1 ? std::make_pair(idx[1], idx[0])
                                                     : std::make_pair(idx[0], idx[1])});
                }
                Tile pt = t;
                pt.g = planarize(t.g, cfg);
                if (is_planar(tile_frame_graph(pt))) {
                    if (witness) *witness = cfg;
                    return true;
                }
            }
            return false;
        }
        for (int i = start; i < (int)cand.size(); ++i) {
            auto& [a, b] = cand[i];
            if (used[a] >= 2 || used[b] >= 2) continue;
            used[a]++;
            used[b]++;
            chosen.push_back(i);
            if (rec(i + 1, remaining - 1)) return true;
            chosen.pop_back();
            used[a]--;
            used[b]--;
        }
        return false;
    };
    for (int size = 1; size <= m; ++size)
        if (rec(0, size)) return true;
    return false;
}

bool is_k_degenerate(const Tile& t, int k) {
    if (!tcr_le(t, 0)) return false;
    Tile ri = tile_transform(t, TileOp::RightInvert);
    for (auto [u, v, m] : t.g.edge_classes()) {
        Tile td = ri;
        td.g.remove_edge_one(u, v);
        if (!tcr_le(td, k - 1)) return false;
    }
    return true;
}

std::string tile_canonical_form(const Tile& t) {
    // marker chains with multiplicities no real edge uses: left chain 3,
    // right chain 4, attachments 5, start pendants 6 and 7
    Multigraph h = t.g;
    int next = h.fresh_vertex_id();
    auto add_chain = [&](const std::vector<int>& wall, int chain_mult, int start_mult) {
        int prev = -1;
        for (size_t i = 0; i < wall.size(); ++i) {
            int c = next++;
            h.add_vertex(c);
            h.add_edge(c, wall[i], 5);
            if (prev >= 0) h.add_edge(prev, c, chain_mult);
            if (i == 0) {
                int p = next++;
                h.add_vertex(p);
                h.add_edge(c, p, start_mult);
            }
            prev = c;
        }
    };
    add_chain(t.left, 3, 6);
    add_chain(t.right, 4, 7);
    return canonical_form(h);
}

// ---- data file parsing ----

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

}  // namespace

TileData parse_tile_data(const std::string& text) {
    TileData data;
    std::istringstream in(text);
    std::string line;
    TileData::Block cur;
    bool in_block = false, is_picture = false;
    int next_id = 0;
    auto vid = [&](const std::string& name) -> int {
        auto it = cur.vid.find(name);
        if (it == cur.vid.end()) throw std::runtime_error("tile data: unknown vertex " + name);
        return it->second;
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "PICTURE" || toks[0] == "FRAME") {
            cur = {};
            cur.name = toks.at(1);
            in_block = true;
            is_picture = toks[0] == "PICTURE";
            next_id = 0;
        } else if (toks[0] == "END") {
            if (!in_block) throw std::runtime_error("tile data: stray END");
            (is_picture ? data.pictures : data.frames).push_back(cur);
            in_block = false;
        } else if (toks[0] == "V:") {
            for (size_t i = 1; i < toks.size(); ++i) {
                cur.vid[toks[i]] = next_id;
                cur.g.add_vertex(next_id);
                ++next_id;
            }
        } else if (toks[0] == "E:") {
            // entries "u-v" or "u-v x<m>", ';' separated
            std::string rest;
            for (size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
            std::istringstream es(rest);
            std::string item;
            while (std::getline(es, item, ';')) {
                auto et = split_ws(item);
                if (et.empty()) continue;
                auto dash = et[0].find('-');
                if (dash == std::string::npos) throw std::runtime_error("tile data: bad edge " + et[0]);
                std::string a = et[0].substr(0, dash), b = et[0].substr(dash + 1);
                int mult = 1;
                if (et.size() > 1 && et[1][0] == 'x') mult = std::stoi(et[1].substr(1));
                cur.g.add_edge(vid(a), vid(b), mult);
            }
        } else if (toks[0] == "SQUARE:") {
            cur.square.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "LWALL:") {
            cur.lwall.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "RWALL:") {
            cur.rwall.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "RIM:") {
            std::string rest;
            for (size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
            std::istringstream es(rest);
            std::string item;
            while (std::getline(es, item, ';')) {
                auto et = split_ws(item);
                if (et.empty()) continue;
                auto dash = et[0].find('-');
                cur.rim.push_back({et[0].substr(0, dash), et[0].substr(dash + 1)});
            }
        } else {
            throw std::runtime_error("tile data: unknown line " + toks[0]);
        }
    }
    return data;
}

namespace {

// Inserts a picture into a frame, with optional 180-degree rotation of the
// picture, by identifying the two squares corner to corner.
Tile insert_picture(const TileData::Block& pic, const TileData::Block& frame, bool rot) {
    // frame vertex ids occupy 0..; picture non-corner vertices get fresh ids
    Tile t;
    std::map<std::string, int> fid;  // frame vertex name -> tile id
    int next = 0;
    for (auto& [name, id] : frame.vid) fid[name] = next++;
    Multigraph g;
    for (auto& [name, id] : fid) g.add_vertex(id);
    for (auto [u, v, m] : frame.g.edge_classes()) {
        // translate via names
        std::string un, vn;
        for (auto& [name, id] : frame.vid) {
            if (id == u) un = name;
            if (id == v) vn = name;
        }
        g.add_edge(fid[un], fid[vn], m);
    }
    // picture corners map onto frame square corners (TL BL TR BR)
    std::map<std::string, std::string> corner;  // picture corner name -> frame corner name
    for (int i = 0; i < 4; ++i) {
        int j = rot ? 3 - i : i;  // rotation: TL<->BR, BL<->TR
        corner[pic.square[i]] = frame.square[j];
    }
    std::map<int, int> pmap;  // picture id -> tile id
    for (auto& [name, id] : pic.vid) {
        auto it = corner.find(name);
        if (it != corner.end())
            pmap[id] = fid[it->second];
        else {
            pmap[id] = next++;
            g.add_vertex(pmap[id]);
        }
    }
    for (auto [u, v, m] : pic.g.edge_classes()) g.add_edge(pmap[u], pmap[v], m);
    // rim tags
    for (auto& [a, b] : frame.rim) g.set_edge_tag(fid[a], fid[b], "rim");
    for (auto& [a, b] : pic.rim) g.set_edge_tag(pmap[pic.vid.at(a)], pmap[pic.vid.at(b)], "rim");
    t.g = g;
    for (auto& name : frame.lwall) t.left.push_back(fid[name]);
    for (auto& name : frame.rwall) t.right.push_back(fid[name]);
    check_tile(t);
    return t;
}

}  // namespace

TileCatalog build_tile_set_s(const TileData& data, bool validate, std::string* error) {
    TileCatalog cat;
    std::map<std::string, int> seen;  // wall-respecting canonical form -> index
    for (auto& pic : data.pictures) {
        for (auto& frame : data.frames) {
            for (int rot = 0; rot < 2; ++rot) {
                Tile t = insert_picture(pic, frame, rot == 1);
                std::string cf = tile_canonical_form(t);
                if (seen.count(cf)) continue;
                seen[cf] = (int)cat.tiles.size();
                cat.tiles.push_back(t);
                cat.provenance.push_back({pic.name, frame.name, rot == 1});
                cat.per_picture[pic.name].push_back((int)cat.tiles.size() - 1);
            }
        }
    }
    if (validate) {
        auto fail = [&](const std::string& msg) {
            if (error) *error = msg;
            throw std::runtime_error("tile set validation: " + msg);
        };
        if ((int)cat.tiles.size() != 42)
            fail("expected 42 tiles, got " + std::to_string(cat.tiles.size()));
        for (auto& [pic, idxs] : cat.per_picture)
            if (idxs.size() != 2 && idxs.size() != 4)
                fail("picture " + pic + " contributes " + std::to_string(idxs.size()));
        for (size_t i = 0; i < cat.tiles.size(); ++i) {
            const Tile& t = cat.tiles[i];
            if (!is_k_degenerate(t, 2))
                fail("tile " + std::to_string(i) + " (" + cat.provenance[i].picture + "/" +
                     cat.provenance[i].frame + ") not 2-degenerate");
            Tile inv = tile_transform(t, TileOp::Invert);
            if (!is_k_degenerate(inv, 2))
                fail("inverted tile " + std::to_string(i) + " not 2-degenerate");
        }
    }
    return cat;
}

Multigraph family_graph(const TileCatalog& cat, const FamilySequence& seq) {
    if (seq.tile_index.size() % 2 == 0 || seq.tile_index.size() < 3)
        throw std::invalid_argument("family sequence must have odd length >= 3");
    Tile acc;
    for (size_t i = 0; i < seq.tile_index.size(); ++i) {
        Tile t = cat.tiles[seq.tile_index[i]];
        if (i % 2 == 1) t = tile_transform(t, TileOp::Invert);
        acc = i == 0 ? t : tile_join(acc, t);
    }
    return tile_cyclize(tile_transform(acc, TileOp::RightInvert));
}

void enumerate_family(const TileCatalog& cat, int m, bool dedupe,
                      const std::function<bool(const FamilySequence&, const Multigraph&)>& emit) {
    int len = 2 * m + 1;
    int k = (int)cat.tiles.size();
    std::set<std::string> seen;
    std::vector<int> idx(len, 0);
    while (true) {
        FamilySequence seq{idx};
        Multigraph g = family_graph(cat, seq);
        bool fresh = true;
        if (dedupe) {
            std::string cf = canonical_form(g);
            fresh = seen.insert(cf).second;
        }
        if (fresh && !emit(seq, g)) return;
        // lexicographic increment
        int pos = len - 1;
        while (pos >= 0 && idx[pos] == k - 1) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) return;
        idx[pos]++;
    }
}

}  // namespace crit
