#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crit {

// Undirected multigraph with integer vertex ids, no self-loops.
// Parallel edges are stored as a multiplicity on the edge class, never as
// duplicate entries.  Optional string tags carry provenance (rim/spoke
// labels, virtual-edge marks); they never influence isomorphism.
class Multigraph {
public:
    Multigraph() = default;

    static std::pair<int, int> key(int u, int v) {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    }

    void add_vertex(int v) { verts_.insert(v); }

    void add_vertices_upto(int n) {
        for (int i = 0; i < n; ++i) verts_.insert(i);
    }

    bool has_vertex(int v) const { return verts_.count(v) != 0; }

    // Accumulates multiplicity; rejects self-loops.
    void add_edge(int u, int v, int mult = 1) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (mult < 1) throw std::invalid_argument("multiplicity < 1");
        verts_.insert(u);
        verts_.insert(v);
        edges_[key(u, v)] += mult;
    }

    void set_edge_mult(int u, int v, int mult) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (mult <= 0)
            edges_.erase(key(u, v));
        else {
            verts_.insert(u);
            verts_.insert(v);
            edges_[key(u, v)] = mult;
        }
    }

    int edge_mult(int u, int v) const {
        auto it = edges_.find(key(u, v));
        return it == edges_.end() ? 0 : it->second;
    }

    bool has_edge(int u, int v) const { return edge_mult(u, v) > 0; }

    // Removes a single parallel copy.
    void remove_edge_one(int u, int v) {
        auto it = edges_.find(key(u, v));
        if (it == edges_.end()) throw std::invalid_argument("no such edge");
        if (--it->second == 0) {
            etags_.erase(it->first);
            edges_.erase(it);
        }
    }

    void remove_edge_all(int u, int v) {
        edges_.erase(key(u, v));
        etags_.erase(key(u, v));
    }

    void remove_vertex(int v) {
        verts_.erase(v);
        vtags_.erase(v);
        for (auto it = edges_.begin(); it != edges_.end();) {
            if (it->first.first == v || it->first.second == v) {
                etags_.erase(it->first);
                it = edges_.erase(it);
            } else
                ++it;
        }
    }

    int n() const { return (int)verts_.size(); }

    // Number of distinct edge classes.
    int m() const { return (int)edges_.size(); }

    // Number of edges counted with multiplicity.
    int m_total() const {
        int s = 0;
        for (auto& [k, m] : edges_) s += m;
        return s;
    }

    // Degree counted with multiplicity.
    int degree(int v) const {
        int d = 0;
        for (auto& [k, m] : edges_)
            if (k.first == v || k.second == v) d += m;
        return d;
    }

    int simple_degree(int v) const {
        int d = 0;
        for (auto& [k, m] : edges_)
            if (k.first == v || k.second == v) d += 1;
        return d;
    }

    std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        for (auto& [k, m] : edges_) {
            if (k.first == v) out.push_back(k.second);
            else if (k.second == v) out.push_back(k.first);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> vertices() const {
        return std::vector<int>(verts_.begin(), verts_.end());
    }

    const std::set<int>& vertex_set() const { return verts_; }

    // Edge classes as (u,v,mult) with u < v, sorted.
    std::vector<std::tuple<int, int, int>> edge_classes() const {
        std::vector<std::tuple<int, int, int>> out;
        out.reserve(edges_.size());
        for (auto& [k, m] : edges_) out.emplace_back(k.first, k.second, m);
        return out;
    }

    // Every parallel copy as its own entry.
    std::vector<std::pair<int, int>> edge_instances() const {
        std::vector<std::pair<int, int>> out;
        for (auto& [k, m] : edges_)
            for (int i = 0; i < m; ++i) out.push_back(k);
        return out;
    }

    void set_vertex_tag(int v, const std::string& t) { vtags_[v] = t; }
    void set_edge_tag(int u, int v, const std::string& t) { etags_[key(u, v)] = t; }

    std::string vertex_tag(int v) const {
        auto it = vtags_.find(v);
        return it == vtags_.end() ? std::string() : it->second;
    }
    std::string edge_tag(int u, int v) const {
        auto it = etags_.find(key(u, v));
        return it == etags_.end() ? std::string() : it->second;
    }

    const std::map<std::pair<int, int>, std::string>& edge_tags() const { return etags_; }
    const std::map<int, std::string>& vertex_tags() const { return vtags_; }

    bool operator==(const Multigraph& o) const {
        return verts_ == o.verts_ && edges_ == o.edges_;
    }

    // Underlying simple graph (multiplicities collapsed to 1, tags kept).
    Multigraph underlying_simple() const {
        Multigraph s;
        s.verts_ = verts_;
        for (auto& [k, m] : edges_) s.edges_[k] = 1;
        s.vtags_ = vtags_;
        s.etags_ = etags_;
        return s;
    }

    // Relabels vertices to 0..n-1 in ascending id order; returns the map
    // new-index -> old-id alongside the graph.
    std::pair<Multigraph, std::vector<int>> compact() const {
        std::vector<int> order(verts_.begin(), verts_.end());
        std::map<int, int> idx;
        for (int i = 0; i < (int)order.size(); ++i) idx[order[i]] = i;
        Multigraph g;
        for (int i = 0; i < (int)order.size(); ++i) g.add_vertex(i);
        for (auto& [k, m] : edges_) g.edges_[key(idx[k.first], idx[k.second])] = m;
        for (auto& [v, t] : vtags_) g.vtags_[idx[v]] = t;
        for (auto& [k, t] : etags_) g.etags_[key(idx[k.first], idx[k.second])] = t;
        return {g, order};
    }

    Multigraph relabelled(const std::map<int, int>& f) const {
        Multigraph g;
        for (int v : verts_) g.add_vertex(f.at(v));
        for (auto& [k, m] : edges_) g.edges_[key(f.at(k.first), f.at(k.second))] += m;
        for (auto& [v, t] : vtags_) g.vtags_[f.at(v)] = t;
        for (auto& [k, t] : etags_) g.etags_[key(f.at(k.first), f.at(k.second))] = t;
        return g;
    }

    // Subgraph induced by a vertex set.
    Multigraph induced(const std::set<int>& s) const {
        Multigraph g;
        for (int v : s)
            if (verts_.count(v)) g.add_vertex(v);
        for (auto& [k, m] : edges_)
            if (s.count(k.first) && s.count(k.second)) {
                g.edges_[k] = m;
                auto it = etags_.find(k);
                if (it != etags_.end()) g.etags_[k] = it->second;
            }
        return g;
    }

    int max_vertex_id() const { return verts_.empty() ? -1 : *verts_.rbegin(); }

    int fresh_vertex_id() const { return max_vertex_id() + 1; }

private:
    std::set<int> verts_;
    std::map<std::pair<int, int>, int> edges_;
    std::map<int, std::string> vtags_;
    std::map<std::pair<int, int>, std::string> etags_;
};

// Witness for a connectivity/structure claim.  Replaying it on the source
// graph reproduces the claimed disconnection or configuration.
struct CutWitness {
    enum class Kind { VertexCut, ThreeCutPartition, Hug, Isthmus, Component };
    Kind kind = Kind::VertexCut;
    std::vector<int> vertices;                 // the cut / hug triangle / isthmus ends
    std::vector<std::pair<int, int>> edges;    // isthmus or hug edges
    std::vector<int> side;                     // one side of the partition, when applicable
};

}  // namespace crit
