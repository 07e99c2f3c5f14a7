#include "tuconfig.hpp"

#include <sstream>

#include "planarity.hpp"

namespace crit {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

}  // namespace

std::vector<TUConfiguration> configuration_catalog(const std::string& text) {
    std::vector<TUConfiguration> out;
    std::istringstream in(text);
    std::string line;
    TUConfiguration cur;
    std::map<std::string, int> vid;
    std::set<std::string> tset, uset;
    bool in_block = false;
    int next_id = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "CONFIG") {
            cur = {};
            vid.clear();
            tset.clear();
            uset.clear();
            next_id = 0;
            cur.name = toks.at(1);
            in_block = true;
        } else if (toks[0] == "V:") {
            for (size_t i = 1; i < toks.size(); ++i) {
                vid[toks[i]] = next_id;
                cur.h.add_vertex(next_id);
                ++next_id;
            }
        } else if (toks[0] == "E:") {
            std::string rest;
            for (size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
            std::istringstream es(rest);
            std::string item;
            while (std::getline(es, item, ';')) {
                auto et = split_ws(item);
                if (et.empty()) continue;
                auto dash = et[0].find('-');
                int mult = et.size() > 1 && et[1][0] == 'x' ? std::stoi(et[1].substr(1)) : 1;
                cur.h.add_edge(vid.at(et[0].substr(0, dash)), vid.at(et[0].substr(dash + 1)),
                               mult);
            }
        } else if (toks[0] == "T:") {
            for (size_t i = 1; i < toks.size(); ++i) tset.insert(toks[i]);
        } else if (toks[0] == "U:") {
            for (size_t i = 1; i < toks.size(); ++i) uset.insert(toks[i]);
        } else if (toks[0] == "END") {
            if (!in_block) throw std::runtime_error("tu config: stray END");
            cur.x = vid.at("x");
            cur.y = vid.at("y");
            cur.z = vid.at("z");
            cur.t_size = (int)tset.size();
            cur.u_size = (int)uset.size();
            // validation: size bound, declared class, apex planarity
            if (cur.h.n() > 6)
                throw std::runtime_error("tu config " + cur.name + ": more than 6 vertices");
            TUProfile p = tu_classify_h(cur.h, cur.x, cur.y, cur.z);
            std::set<int> expect_t, expect_u;
            for (auto& n : tset) expect_t.insert(vid.at(n));
            for (auto& n : uset) expect_u.insert(vid.at(n));
            if (p.T != expect_t || p.U != expect_u)
                throw std::runtime_error("tu config " + cur.name + ": declared class mismatch");
            Multigraph plus = cur.h;
            int apex = plus.fresh_vertex_id();
            plus.add_edge(apex, cur.x);
            plus.add_edge(apex, cur.y);
            plus.add_edge(apex, cur.z);
            if (!is_planar(plus))
                throw std::runtime_error("tu config " + cur.name + ": apex graph not planar");
            out.push_back(cur);
            in_block = false;
        }
    }
    if (out.size() > 20) throw std::runtime_error("tu config: more than 20 entries");
    return out;
}

std::vector<TUConfiguration> configurations_of_class(
    const std::vector<TUConfiguration>& cat, int t_size, int u_size) {
    std::vector<TUConfiguration> out;
    for (auto& c : cat)
        if (c.t_size == t_size && c.u_size == u_size) out.push_back(c);
    return out;
}

}  // namespace crit
