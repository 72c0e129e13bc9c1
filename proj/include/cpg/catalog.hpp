// Machine-readable fixtures for every concrete construction in the paper,
// each with its expected extraction, plus the 6-regular family generator
// (line graphs of 4-regular planar graphs drawn orthogonally).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpg/contact.hpp"
#include "cpg/embedding.hpp"
#include "cpg/gadgets.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"
#include "cpg/linegraph.hpp"

namespace cpg {

struct CatalogEntry {
    std::string name;
    std::optional<CpgRepresentation> rep;
    std::optional<SimpleGraph> graph;           // expected extraction or bare graph
    std::optional<OrthogonalEmbedding> embedding;
    std::optional<int> expected_max_bends;
};

namespace fixtures_detail {

// Four unit segments meeting endpoint-wise at (1,1): the smallest type I point.
inline CpgRepresentation k4_cross() {
    CpgRepresentation rep;
    rep.rows = 3;
    rep.cols = 3;
    rep.paths = {
        {"left", {{1, 0}, {1, 1}}},
        {"right", {{1, 1}, {1, 2}}},
        {"down", {{0, 1}, {1, 1}}},
        {"up", {{1, 1}, {2, 1}}},
    };
    return rep;
}

// The nonplanar 0-bend example: seven paths on a 3x3 grid whose contact graph
// contains K3,3 as a minor (contract {6,7}).
inline CpgRepresentation fig3_rep() {
    CpgRepresentation rep;
    rep.rows = 3;
    rep.cols = 3;
    rep.paths = {
        {"1", {{1, 0}, {1, 2}}},
        {"2", {{2, 0}, {2, 2}}},
        {"3", {{0, 0}, {0, 2}}},
        {"4", {{0, 2}, {2, 2}}},
        {"5", {{0, 0}, {2, 0}}},
        {"6", {{1, 1}, {2, 1}}},
        {"7", {{0, 1}, {1, 1}}},
    };
    return rep;
}

inline SimpleGraph fig3_graph() {
    return SimpleGraph::from_edges({
        {"1", "4"}, {"1", "5"}, {"1", "6"}, {"1", "7"},
        {"2", "4"}, {"2", "5"}, {"2", "6"},
        {"3", "4"}, {"3", "5"}, {"3", "7"},
        {"6", "7"},
    });
}

// A maximally planar CPG graph on 7 vertices with its representation.
inline SimpleGraph fig5_graph() {
    return SimpleGraph::from_edges({
        {"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"}, {"1", "6"},
        {"2", "3"}, {"2", "4"}, {"2", "5"}, {"2", "7"},
        {"3", "4"}, {"3", "6"}, {"3", "7"},
        {"4", "5"}, {"4", "6"}, {"4", "7"},
    });
}

inline CpgRepresentation fig5_rep() {
    CpgRepresentation rep;
    rep.rows = 4;
    rep.cols = 6;
    rep.paths = {
        {"1", {{1, 3}, {0, 3}, {0, 5}, {1, 5}}},
        {"2", {{1, 3}, {2, 3}, {2, 4}}},
        {"3", {{2, 4}, {2, 5}, {1, 5}}},
        {"4", {{1, 3}, {1, 4}, {2, 4}}},
        {"5", {{1, 3}, {1, 2}}},
        {"6", {{1, 4}, {1, 5}}},
        {"7", {{2, 4}, {3, 4}}},
    };
    return rep;
}

// Maximally planar but not CPG: built by repeatedly inserting a vertex into a
// triangular face so that exactly 13 vertices of degree 3 remain.
inline SimpleGraph fig6a_graph() {
    return SimpleGraph::from_edges({
        {"a", "b"}, {"a", "c"}, {"a", "d"}, {"a", "j"}, {"a", "k"}, {"a", "l"},
        {"a", "1"}, {"a", "2"}, {"a", "3"}, {"a", "4"}, {"a", "5"}, {"a", "6"},
        {"b", "e"}, {"b", "j"}, {"b", "k"}, {"b", "5"}, {"b", "6"}, {"b", "9"}, {"b", "10"},
        {"c", "f"}, {"c", "k"}, {"c", "l"}, {"c", "3"}, {"c", "4"}, {"c", "7"}, {"c", "8"},
        {"d", "g"}, {"d", "j"}, {"d", "l"}, {"d", "1"}, {"d", "2"},
        {"e", "h"}, {"e", "j"}, {"e", "k"}, {"e", "9"}, {"e", "10"},
        {"f", "i"}, {"f", "k"}, {"f", "l"}, {"f", "7"}, {"f", "8"},
        {"g", "j"}, {"g", "l"},
        {"h", "j"}, {"h", "k"},
        {"i", "k"}, {"i", "l"},
        {"j", "k"}, {"j", "l"}, {"j", "1"}, {"j", "6"}, {"j", "10"},
        {"k", "l"}, {"k", "4"}, {"k", "5"}, {"k", "8"}, {"k", "9"},
        {"l", "2"}, {"l", "3"}, {"l", "7"},
    });
}

// The 2-bend representation of K6.
inline CpgRepresentation fig7_rep() {
    CpgRepresentation rep;
    rep.rows = 6;
    rep.cols = 5;
    rep.paths = {
        {"1", {{1, 1}, {1, 0}, {4, 0}, {4, 3}}},
        {"2", {{1, 1}, {1, 2}, {3, 2}, {3, 3}}},
        {"3", {{4, 1}, {2, 1}, {2, 2}}},
        {"4", {{4, 1}, {5, 1}, {5, 3}, {2, 3}}},
        {"5", {{2, 1}, {0, 1}, {0, 3}, {2, 3}}},
        {"6", {{2, 2}, {2, 4}, {4, 4}, {4, 3}}},
    };
    return rep;
}

// Orthogonal embedding of K4 (max degree 3); edge ad and db each carry one
// interior vertical segment, dc is a straight vertical edge.
inline OrthogonalEmbedding orth_k4() {
    OrthogonalEmbedding emb;
    emb.vertices = {
        {"a", {3, 0}},  // (row, col)
        {"b", {3, 6}},
        {"c", {7, 3}},
        {"d", {4, 3}},
    };
    auto edge = [&](const std::string& u, const std::string& v,
                    std::vector<GridPoint> poly) { emb.edges.push_back({u, v, std::move(poly)}); };
    edge("a", "b", {{3, 0}, {0, 0}, {0, 6}, {3, 6}});
    edge("a", "c", {{3, 0}, {7, 0}, {7, 3}});
    edge("a", "d", {{3, 0}, {3, 2}, {4, 2}, {4, 3}});
    edge("d", "c", {{4, 3}, {7, 3}});
    edge("d", "b", {{4, 3}, {4, 5}, {3, 5}, {3, 6}});
    edge("c", "b", {{7, 3}, {7, 6}, {3, 6}});
    return emb;
}

// Orthogonal embedding of C5 on a staircase; v3-v4 is a straight vertical
// edge, the rest need gadgets.
inline OrthogonalEmbedding orth_c5() {
    OrthogonalEmbedding emb;
    emb.vertices = {
        {"v1", {0, 0}}, {"v2", {0, 3}}, {"v3", {0, 6}}, {"v4", {3, 6}}, {"v5", {3, 3}},
    };
    auto edge = [&](const std::string& u, const std::string& v,
                    std::vector<GridPoint> poly) { emb.edges.push_back({u, v, std::move(poly)}); };
    edge("v1", "v2", {{0, 0}, {0, 3}});
    edge("v2", "v3", {{0, 3}, {0, 6}});
    edge("v3", "v4", {{0, 6}, {3, 6}});
    edge("v4", "v5", {{3, 6}, {3, 3}});
    edge("v5", "v1", {{3, 3}, {3, 0}, {0, 0}});
    return emb;
}

// The local fragment from the appendix illustration: a degree-4 vertex u with
// one straight vertical edge, one straight horizontal edge, a 2-bend edge and
// a 4-bend edge. Coordinates shifted so everything is non-negative.
inline OrthogonalEmbedding orth_fullexample() {
    OrthogonalEmbedding emb;
    emb.vertices = {
        {"v", {2, 0}}, {"u", {7, 12}}, {"t", {7, 20}}, {"s", {0, 12}}, {"w", {19, 21}},
    };
    auto edge = [&](const std::string& u, const std::string& v,
                    std::vector<GridPoint> poly) { emb.edges.push_back({u, v, std::move(poly)}); };
    edge("v", "u", {{2, 0}, {2, 6}, {7, 6}, {7, 12}});
    edge("u", "t", {{7, 12}, {7, 20}});
    edge("u", "s", {{7, 12}, {0, 12}});
    edge("u", "w", {{7, 12}, {12, 12}, {12, 17}, {16, 17}, {16, 21}, {19, 21}});
    return emb;
}

// The octahedron (= K2,2,2) and a hand-built orthogonal embedding. Inner
// triangle a,b,c; outer A,B,C; antipodal pairs A-a, B-b, C-c are non-edges.
inline SimpleGraph octahedron_graph() {
    return SimpleGraph::from_edges({
        {"a", "b"}, {"b", "c"}, {"c", "a"},
        {"A", "B"}, {"B", "C"}, {"C", "A"},
        {"A", "b"}, {"A", "c"},
        {"B", "a"}, {"B", "c"},
        {"C", "a"}, {"C", "b"},
    });
}

inline OrthogonalEmbedding orth_octahedron() {
    OrthogonalEmbedding emb;
    // original sketch used x in [-6,22], y in [-6,22]; shifted by +6
    auto P = [](int y, int x) { return GridPoint{y + 6, x + 6}; };
    emb.vertices = {
        {"a", P(6, 6)}, {"b", P(6, 10)}, {"c", P(10, 10)},
        {"A", P(8, 18)}, {"B", P(16, 2)}, {"C", P(-2, 14)},
    };
    auto edge = [&](const std::string& u, const std::string& v,
                    std::vector<std::pair<int, int>> xy) {
        EmbeddedEdge e{u, v, {}};
        for (auto [x, y] : xy) e.polyline.push_back(P(y, x));
        emb.edges.push_back(std::move(e));
    };
    edge("a", "b", {{6, 6}, {10, 6}});
    edge("b", "c", {{10, 6}, {10, 10}});
    edge("c", "a", {{10, 10}, {6, 10}, {6, 6}});
    edge("b", "A", {{10, 6}, {14, 6}, {14, 8}, {18, 8}});
    edge("c", "A", {{10, 10}, {18, 10}, {18, 8}});
    edge("a", "B", {{6, 6}, {0, 6}, {0, 16}, {2, 16}});
    edge("c", "B", {{10, 10}, {10, 14}, {2, 14}, {2, 16}});
    edge("a", "C", {{6, 6}, {6, -2}, {14, -2}});
    edge("b", "C", {{10, 6}, {10, 0}, {14, 0}, {14, -2}});
    edge("C", "A", {{14, -2}, {16, -2}, {16, 2}, {18, 2}, {18, 8}});
    edge("A", "B", {{18, 8}, {22, 8}, {22, 16}, {2, 16}});
    edge("C", "B", {{14, -2}, {14, -4}, {-4, -4}, {-4, 20}, {2, 20}, {2, 16}});
    return emb;
}

}  // namespace fixtures_detail

// Representation of L(G) from an orthogonal embedding of a 4-regular planar
// graph G: the edge polylines themselves are the paths, every original vertex
// point becomes a type I contact of its four edge-paths.
inline CpgRepresentation six_regular_family(const OrthogonalEmbedding& emb) {
    validate_embedding(emb);
    SimpleGraph g = emb.abstract_graph();
    for (const auto& v : g.vertices())
        if (g.degree(v) != 4) throw std::invalid_argument("graph is not 4-regular at '" + v + "'");

    CpgRepresentation rep;
    for (const auto& e : emb.edges) {
        rep.paths.push_back({edge_label(e.u, e.v), e.polyline});
        for (const auto& c : e.polyline) {
            rep.rows = std::max(rep.rows, c.row + 1);
            rep.cols = std::max(rep.cols, c.col + 1);
        }
    }
    return rep;
}

inline std::vector<CatalogEntry> fixtures() {
    using namespace fixtures_detail;
    std::vector<CatalogEntry> out;

    out.push_back({"fig2_k4_cross", k4_cross(),
                   SimpleGraph::complete({"left", "right", "up", "down"}), std::nullopt, 0});
    out.push_back({"fig3_nonplanar_b0", fig3_rep(), fig3_graph(), std::nullopt, 0});
    out.push_back({"fig5_maxplanar", fig5_rep(), fig5_graph(), std::nullopt, 2});
    out.push_back({"fig6a_not_cpg", std::nullopt, fig6a_graph(), std::nullopt, std::nullopt});
    out.push_back({"fig7_k6_b2", fig7_rep(),
                   SimpleGraph::complete({"1", "2", "3", "4", "5", "6"}), std::nullopt, 2});
    out.push_back({"gadget_h", gadget_h_rep(), gadget_h(), std::nullopt, 0});
    out.push_back({"gadget_h_prime", gadget_h_prime_rep(), gadget_h_prime(), std::nullopt, 0});
    out.push_back({"orth_k4", std::nullopt,
                   SimpleGraph::complete({"a", "b", "c", "d"}), orth_k4(), std::nullopt});
    out.push_back({"orth_c5", std::nullopt,
                   SimpleGraph::from_edges({{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"},
                                            {"v4", "v5"}, {"v5", "v1"}}),
                   orth_c5(), std::nullopt});
    out.push_back({"orth_fullexample", std::nullopt,
                   SimpleGraph::from_edges({{"v", "u"}, {"u", "t"}, {"u", "s"}, {"u", "w"}}),
                   orth_fullexample(), std::nullopt});
    out.push_back({"octahedron", std::nullopt, octahedron_graph(), orth_octahedron(), std::nullopt});
    return out;
}

inline std::optional<CatalogEntry> fixture(const std::string& name) {
    for (auto& e : fixtures())
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace cpg
