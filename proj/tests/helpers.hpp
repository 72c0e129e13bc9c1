// Shared test machinery: seeded random generators for representations,
// drawings and graphs, plus independent brute-force oracles used to
// cross-check the library implementations.
#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cpg/contact.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"
#include "cpg/linegraph.hpp"

namespace cpg_test {

using namespace cpg;

// Incremental rejection sampler for valid representations: unit edges stay
// disjoint, interiors stay pairwise disjoint, endpoints may land anywhere.
inline CpgRepresentation random_rep(std::mt19937& rng, int want_paths, int bend_budget,
                                    int grid = 14) {
    CpgRepresentation rep;
    rep.rows = grid;
    rep.cols = grid;

    std::set<UnitEdge> used_edges;
    std::set<GridPoint> interiors;

    std::uniform_int_distribution<int> coord(0, grid - 1);
    std::uniform_int_distribution<int> seg_len(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);

    int attempts = 0;
    while (static_cast<int>(rep.paths.size()) < want_paths && attempts < want_paths * 120) {
        ++attempts;
        int bends = std::uniform_int_distribution<int>(0, bend_budget)(rng);
        GridPoint at{coord(rng), coord(rng)};
        bool horiz = coin(rng) == 1;
        std::vector<GridPoint> corners{at};
        for (int s = 0; s <= bends; ++s) {
            int len = seg_len(rng);
            int sign = coin(rng) ? 1 : -1;
            GridPoint next = at;
            if (horiz)
                next.col += sign * len;
            else
                next.row += sign * len;
            corners.push_back(next);
            at = next;
            horiz = !horiz;
        }

        GridPath candidate{"p" + std::to_string(rep.paths.size()), corners};
        if (corner_structure_error(candidate.corners)) continue;
        std::vector<GridPoint> pts;
        try {
            pts = expand(candidate);
        } catch (const std::invalid_argument&) {
            continue;
        }
        bool ok = true;
        for (const auto& q : pts)
            if (q.row < 0 || q.row >= grid || q.col < 0 || q.col >= grid) ok = false;
        if (!ok) continue;
        std::vector<UnitEdge> new_edges;
        for (std::size_t i = 0; i + 1 < pts.size() && ok; ++i) {
            UnitEdge e = unit_edge(pts[i], pts[i + 1]);
            if (used_edges.count(e)) ok = false;
            new_edges.push_back(e);
        }
        for (std::size_t i = 1; i + 1 < pts.size() && ok; ++i)
            if (interiors.count(pts[i])) ok = false;
        // the new interior may not swallow an existing interior point either;
        // endpoints of older paths are fine
        if (!ok) continue;

        for (const auto& e : new_edges) used_edges.insert(e);
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) interiors.insert(pts[i]);
        rep.paths.push_back(candidate);
    }
    return rep;
}

// Quadratic reference extraction: compare expanded point sets directly.
inline SimpleGraph contact_oracle(const CpgRepresentation& rep) {
    SimpleGraph g;
    std::vector<std::vector<GridPoint>> expanded;
    for (const auto& p : rep.paths) {
        g.add_vertex(p.vertex);
        expanded.push_back(expand(p));
    }
    for (std::size_t i = 0; i < rep.paths.size(); ++i)
        for (std::size_t j = i + 1; j < rep.paths.size(); ++j) {
            bool touch = false;
            for (const auto& a : expanded[i]) {
                for (const auto& b : expanded[j]) {
                    if (a != b) continue;
                    bool end_i = a == expanded[i].front() || a == expanded[i].back();
                    bool end_j = b == expanded[j].front() || b == expanded[j].back();
                    if (end_i || end_j) touch = true;
                }
            }
            if (touch) g.add_edge(rep.paths[i].vertex, rep.paths[j].vertex);
        }
    return g;
}

// Exhaustive K3,3-minor reference: every assignment of vertices to
// {unused, S1..S6}, checked naively. Only for graphs on <= 8 vertices.
inline bool k33_minor_oracle(const SimpleGraph& g) {
    IndexedGraph ig(g);
    const int n = static_cast<int>(ig.n);
    if (n > 8) throw std::invalid_argument("oracle capped at 8 vertices");
    if (n < 6) return false;

    std::vector<int> label(n, -1);
    auto connected = [&](int set_id) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (label[v] == set_id) members.push_back(v);
        if (members.empty()) return false;
        std::set<int> seen{members[0]};
        std::vector<int> stack{members[0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : members)
                if (ig.adj[x].test(y) && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        return seen.size() == members.size();
    };
    auto touches = [&](int a, int b) {
        for (int v = 0; v < n; ++v)
            if (label[v] == a)
                for (int w = 0; w < n; ++w)
                    if (label[w] == b && ig.adj[v].test(w)) return true;
        return false;
    };

    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 7;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int v = 0; v < n; ++v) {
            label[v] = static_cast<int>(c % 7) - 1;
            c /= 7;
        }
        bool ok = true;
        for (int s = 0; s < 6 && ok; ++s)
            if (!connected(s)) ok = false;
        for (int a = 0; a < 3 && ok; ++a)
            for (int b = 3; b < 6 && ok; ++b)
                if (!touches(a, b)) ok = false;
        if (ok) return true;
    }
    return false;
}

// Random induced sub-grid drawing: active lattice points, segments between
// consecutive active points in a row or column, inserted only when they keep
// the drawing valid.
inline RectilinearDrawing random_drawing(std::mt19937& rng, int size = 5) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<std::vector<bool>> active(size, std::vector<bool>(size, false));
    RectilinearDrawing d;
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c)
            if (coin(rng) != 0) {
                active[r][c] = true;
                d.vertices["g" + std::to_string(r) + "_" + std::to_string(c)] = {r, c};
            }

    std::set<GridPoint> vertex_points;
    for (const auto& [v, p] : d.vertices) vertex_points.insert(p);
    std::set<UnitEdge> used;
    std::set<GridPoint> interiors;

    auto name = [&](int r, int c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
    auto try_edge = [&](GridPoint a, GridPoint b) {
        if (coin(rng) == 0) return;
        GridPath seg{"e", {a, b}};
        auto pts = expand(seg);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (used.count(unit_edge(pts[i], pts[i + 1]))) return;
        for (std::size_t i = 1; i + 1 < pts.size(); ++i)
            if (interiors.count(pts[i]) || vertex_points.count(pts[i])) return;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) used.insert(unit_edge(pts[i], pts[i + 1]));
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) interiors.insert(pts[i]);
        d.edges.emplace_back(name(a.row, a.col), name(b.row, b.col));
    };

    for (int r = 0; r < size; ++r) {
        std::optional<int> prev;
        for (int c = 0; c < size; ++c) {
            if (!active[r][c]) continue;
            if (prev) try_edge({r, *prev}, {r, c});
            prev = c;
        }
    }
    for (int c = 0; c < size; ++c) {
        std::optional<int> prev;
        for (int r = 0; r < size; ++r) {
            if (!active[r][c]) continue;
            if (prev) try_edge({*prev, c}, {r, c});
            prev = r;
        }
    }
    // drop isolated vertices so L(G) talks about the drawn part only
    std::set<std::string> touched;
    for (const auto& [u, v] : d.edges) {
        touched.insert(u);
        touched.insert(v);
    }
    for (auto it = d.vertices.begin(); it != d.vertices.end();)
        it = touched.count(it->first) ? std::next(it) : d.vertices.erase(it);
    return d;
}

inline SimpleGraph drawn_graph(const RectilinearDrawing& d) {
    SimpleGraph g;
    for (const auto& [v, p] : d.vertices) g.add_vertex(v);
    for (const auto& [u, v] : d.edges) g.add_edge(u, v);
    return g;
}

inline std::map<std::string, std::string> invert_edge_map(
    const std::map<std::string, std::string>& m) {
    std::map<std::string, std::string> inv;
    for (const auto& [k, v] : m) inv[v] = k;
    return inv;
}

inline SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
    SimpleGraph g;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    return g;
}

}  // namespace cpg_test
