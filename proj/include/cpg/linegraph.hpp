// The recognition correspondence: rectilinear planar drawings of G versus
// 0-bend representations of the line graph L(G).
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpg/contact.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

// Drawing with every edge a single horizontal or vertical segment between its
// endpoints' grid points.
struct RectilinearDrawing {
    std::map<std::string, GridPoint> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

inline std::string edge_label(const std::string& u, const std::string& v) {
    return u < v ? u + "|" + v : v + "|" + u;
}

// Vertices of L(G) are the edges of G, adjacent when the edges share an
// endvertex.
inline SimpleGraph line_graph(const SimpleGraph& g) {
    SimpleGraph lg;
    std::vector<SimpleGraph::Edge> edges(g.edges().begin(), g.edges().end());
    for (const auto& e : edges) lg.add_vertex(edge_label(e.first, e.second));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& a = edges[i];
            const auto& b = edges[j];
            if (a.first == b.first || a.first == b.second || a.second == b.first ||
                a.second == b.second)
                lg.add_edge(edge_label(a.first, a.second), edge_label(b.first, b.second));
        }
    return lg;
}

inline bool is_claw_free(const SimpleGraph& g) {
    for (const auto& v : g.vertices()) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[k]) &&
                        !g.adjacent(nb[j], nb[k]))
                        return false;
    }
    return true;
}

inline void validate_drawing(const RectilinearDrawing& d) {
    std::set<GridPoint> vertex_points;
    for (const auto& [v, p] : d.vertices) {
        if (p.row < 0 || p.col < 0) throw std::invalid_argument("negative coordinate at '" + v + "'");
        if (!vertex_points.insert(p).second)
            throw std::invalid_argument("two vertices share a grid point");
    }
    std::map<UnitEdge, std::string> edge_owner;
    std::map<GridPoint, std::string> interior_owner;
    for (const auto& [u, v] : d.edges) {
        if (!d.vertices.count(u) || !d.vertices.count(v))
            throw std::invalid_argument("edge endpoint missing");
        GridPoint a = d.vertices.at(u);
        GridPoint b = d.vertices.at(v);
        if (a.row != b.row && a.col != b.col)
            throw std::invalid_argument("edge " + edge_label(u, v) + " is not axis-aligned");
        GridPath seg{edge_label(u, v), {a, b}};
        auto pts = expand(seg);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            auto [it, fresh] = edge_owner.emplace(unit_edge(pts[i], pts[i + 1]), seg.vertex);
            if (!fresh)
                throw std::invalid_argument("segments " + it->second + " and " + seg.vertex + " overlap");
        }
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            if (vertex_points.count(pts[i]))
                throw std::invalid_argument("segment " + seg.vertex + " passes through a vertex point");
            auto [it, fresh] = interior_owner.emplace(pts[i], seg.vertex);
            if (!fresh)
                throw std::invalid_argument("segments " + it->second + " and " + seg.vertex + " cross");
        }
    }
}

// One 0-bend path per segment, labeled by its edge; the contact graph is
// isomorphic to L(G) under that labeling.
inline CpgRepresentation rep_from_rectilinear(const RectilinearDrawing& d) {
    validate_drawing(d);
    CpgRepresentation rep;
    for (const auto& [u, v] : d.edges)
        rep.paths.push_back({edge_label(u, v), {d.vertices.at(u), d.vertices.at(v)}});
    for (const auto& p : rep.paths)
        for (const auto& c : p.corners) {
            rep.rows = std::max(rep.rows, c.row + 1);
            rep.cols = std::max(rep.cols, c.col + 1);
        }
    return rep;
}

struct RecoveredRectilinear {
    RectilinearDrawing drawing;
    SimpleGraph graph;                                      // the recovered G
    std::map<std::string, std::string> edge_of_path;        // path id -> edge label in G
};

// Shorten every path of a 0-bend, claw-free representation to the minimal
// subsegment spanning its contact points; contact points become vertices, one
// fresh degree-1 vertex per contact-free endpoint, one G-edge per path.
inline RecoveredRectilinear rectilinear_from_rep(const CpgRepresentation& rep) {
    if (max_bends(rep) != 0) throw std::invalid_argument("representation has bends");
    SimpleGraph extraction = contact_graph(rep);
    if (!is_claw_free(extraction))
        throw std::invalid_argument("precondition violated: extraction is not claw-free");

    auto index = detail::point_index(rep);

    RecoveredRectilinear out;
    auto point_name = [](GridPoint p) {
        return "p" + std::to_string(p.row) + "_" + std::to_string(p.col);
    };

    int fresh = 0;
    for (const auto& path : rep.paths) {
        auto pts = expand(path);
        std::vector<GridPoint> contacts;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& rec = index.at(pts[i]);
            bool endpoint_here = (i == 0 || i + 1 == pts.size());
            std::size_t others = rec.ends.size() - (endpoint_here ? 1 : 0);
            bool is_contact = endpoint_here ? (others > 0 || rec.through.has_value()) : (others > 0);
            if (is_contact) contacts.push_back(pts[i]);
        }
        if (contacts.size() > 2)
            throw std::invalid_argument("precondition violated: path '" + path.vertex +
                                        "' has more than two contact points");

        GridPoint a, b;
        std::string na, nb;
        if (contacts.size() == 2) {
            a = contacts[0];
            b = contacts[1];
            na = point_name(a);
            nb = point_name(b);
        } else if (contacts.size() == 1) {
            // unit segment along the original carrier, fresh far end
            a = contacts[0];
            na = point_name(a);
            std::size_t ia = 0;
            while (pts[ia] != a) ++ia;
            b = (ia + 1 < pts.size()) ? pts[ia + 1] : pts[ia - 1];
            nb = "t" + std::to_string(fresh++);
        } else {
            a = pts.front();
            b = pts[1];  // paths have length >= 1
            na = "t" + std::to_string(fresh++);
            nb = "t" + std::to_string(fresh++);
        }
        out.drawing.vertices.emplace(na, a);
        out.drawing.vertices.emplace(nb, b);
        out.drawing.edges.emplace_back(na, nb);
        out.graph.add_edge(na, nb);
        out.edge_of_path[path.vertex] = edge_label(na, nb);
    }
    validate_drawing(out.drawing);
    return out;
}

// Equality of g1 and g2 after renaming g1's vertices through `name_map`.
inline bool graphs_equal_under(const SimpleGraph& g1, const SimpleGraph& g2,
                               const std::map<std::string, std::string>& name_map) {
    SimpleGraph renamed;
    for (const auto& v : g1.vertices()) renamed.add_vertex(name_map.at(v));
    for (const auto& [u, v] : g1.edges()) renamed.add_edge(name_map.at(u), name_map.at(v));
    return renamed == g2;
}

}  // namespace cpg
