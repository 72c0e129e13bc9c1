// Undirected labeled simple graph, plus a bitset-indexed view used by the
// exact search routines (clique, coloring, minors).
#pragma once

#include <bitset>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpg {

class SimpleGraph {
public:
    using Edge = std::pair<std::string, std::string>;  // normalized, first < second

    void add_vertex(const std::string& v) { vertices_.insert(v); }

    void add_edge(const std::string& u, const std::string& v) {
        if (u == v) throw std::invalid_argument("self-loop at '" + u + "'");
        vertices_.insert(u);
        vertices_.insert(v);
        edges_.insert(u < v ? Edge{u, v} : Edge{v, u});
    }

    bool has_vertex(const std::string& v) const { return vertices_.count(v) != 0; }

    bool adjacent(const std::string& u, const std::string& v) const {
        return edges_.count(u < v ? Edge{u, v} : Edge{v, u}) != 0;
    }

    std::size_t degree(const std::string& v) const {
        std::size_t d = 0;
        for (const auto& e : edges_) d += (e.first == v || e.second == v);
        return d;
    }

    std::vector<std::string> neighbors(const std::string& v) const {
        std::vector<std::string> out;
        for (const auto& e : edges_) {
            if (e.first == v) out.push_back(e.second);
            if (e.second == v) out.push_back(e.first);
        }
        return out;
    }

    SimpleGraph induced(const std::set<std::string>& keep) const {
        SimpleGraph g;
        for (const auto& v : keep)
            if (has_vertex(v)) g.add_vertex(v);
        for (const auto& e : edges_)
            if (keep.count(e.first) && keep.count(e.second)) g.add_edge(e.first, e.second);
        return g;
    }

    const std::set<std::string>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const SimpleGraph&) const = default;

    static SimpleGraph from_edges(const std::vector<Edge>& edges,
                                  const std::vector<std::string>& isolated = {}) {
        SimpleGraph g;
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        for (const auto& v : isolated) g.add_vertex(v);
        return g;
    }

    static SimpleGraph complete(const std::vector<std::string>& vs) {
        SimpleGraph g;
        for (const auto& v : vs) g.add_vertex(v);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
        return g;
    }

private:
    std::set<std::string> vertices_;
    std::set<Edge> edges_;
};

// Dense indexed view. Vertex order is the sorted label order, so everything
// downstream is deterministic.
struct IndexedGraph {
    static constexpr std::size_t kMax = 256;
    using Mask = std::bitset<kMax>;

    std::vector<std::string> labels;
    std::vector<Mask> adj;
    std::size_t n = 0;

    explicit IndexedGraph(const SimpleGraph& g) {
        n = g.vertex_count();
        if (n > kMax) throw std::invalid_argument("size-limit exceeded: more than 256 vertices");
        labels.assign(g.vertices().begin(), g.vertices().end());
        adj.assign(n, Mask{});
        std::map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) idx[labels[i]] = i;
        for (const auto& [u, v] : g.edges()) {
            adj[idx[u]].set(idx[v]);
            adj[idx[v]].set(idx[u]);
        }
    }

    std::size_t degree(std::size_t i) const { return adj[i].count(); }
};

}  // namespace cpg
