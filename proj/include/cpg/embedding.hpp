// Orthogonal grid embeddings: vertices at lattice points, edges as interiorly
// disjoint rectilinear polylines with at most four bends. These are inputs
// (hand-built fixtures); no drawing algorithm lives here.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

struct EmbeddedEdge {
    std::string u, v;
    std::vector<GridPoint> polyline;  // first point = u's grid point, last = v's
};

struct OrthogonalEmbedding {
    std::map<std::string, GridPoint> vertices;
    std::vector<EmbeddedEdge> edges;

    SimpleGraph abstract_graph() const {
        SimpleGraph g;
        for (const auto& [v, p] : vertices) g.add_vertex(v);
        for (const auto& e : edges) g.add_edge(e.u, e.v);
        return g;
    }
};

// Direction of the first unit step of a polyline leaving `from`.
enum class Dir { North, South, East, West };

inline Dir leave_direction(const std::vector<GridPoint>& polyline, bool from_front) {
    GridPoint a = from_front ? polyline.front() : polyline.back();
    GridPoint b = from_front ? polyline[1] : polyline[polyline.size() - 2];
    if (b.row > a.row) return Dir::North;
    if (b.row < a.row) return Dir::South;
    if (b.col > a.col) return Dir::East;
    return Dir::West;
}

inline void validate_embedding(const OrthogonalEmbedding& emb) {
    std::map<GridPoint, std::string> vertex_at;
    for (const auto& [v, p] : emb.vertices) {
        if (p.row < 0 || p.col < 0)
            throw std::invalid_argument("negative coordinate at vertex '" + v + "'");
        if (!vertex_at.emplace(p, v).second)
            throw std::invalid_argument("vertices '" + v + "' and '" + vertex_at[p] + "' share a point");
    }

    std::map<std::string, std::set<Dir>> used_dirs;
    std::map<UnitEdge, std::string> edge_owner;
    std::map<GridPoint, std::string> interior_owner;
    std::set<std::pair<std::string, std::string>> seen_edges;

    for (const auto& e : emb.edges) {
        std::string name = e.u + "~" + e.v;
        if (!emb.vertices.count(e.u) || !emb.vertices.count(e.v))
            throw std::invalid_argument("edge " + name + " references an unknown vertex");
        auto key = e.u < e.v ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u);
        if (e.u == e.v || !seen_edges.insert(key).second)
            throw std::invalid_argument("edge " + name + " is a loop or duplicate");
        if (auto err = corner_structure_error(e.polyline))
            throw std::invalid_argument("edge " + name + ": " + *err);
        if (static_cast<int>(e.polyline.size()) - 2 > 4)
            throw std::invalid_argument("edge " + name + " has more than four bends");
        if (e.polyline.front() != emb.vertices.at(e.u) || e.polyline.back() != emb.vertices.at(e.v))
            throw std::invalid_argument("edge " + name + " does not join its endpoints");

        for (auto [vertex, from_front] : {std::pair{e.u, true}, std::pair{e.v, false}}) {
            Dir d = leave_direction(e.polyline, from_front);
            if (!used_dirs[vertex].insert(d).second)
                throw std::invalid_argument("two edges leave '" + vertex + "' in the same direction");
        }

        auto pts = expand(GridPath{name, e.polyline});
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            auto [it, fresh] = edge_owner.emplace(unit_edge(pts[i], pts[i + 1]), name);
            if (!fresh)
                throw std::invalid_argument("edges " + it->second + " and " + name + " overlap");
        }
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            if (vertex_at.count(pts[i]))
                throw std::invalid_argument("edge " + name + " passes through vertex '" +
                                            vertex_at[pts[i]] + "'");
            auto [it, fresh] = interior_owner.emplace(pts[i], name);
            if (!fresh)
                throw std::invalid_argument("edges " + it->second + " and " + name + " cross");
        }
    }

    // max degree 4 and "meet vertex points only at own endpoints" both fall
    // out of the distinct-leave-direction and pass-through checks above
}

}  // namespace cpg
