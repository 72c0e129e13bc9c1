// Constructive colorings: the 4-coloring of 0-bend representations, the
// 6-coloring via degeneracy peeling plus a constructive Brooks step, and an
// exact small-instance k-colorability oracle.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpg/certificates.hpp"
#include "cpg/contact.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

using Coloring = std::map<std::string, int>;

// True iff the coloring is proper; it must assign every vertex.
inline bool verify_coloring(const SimpleGraph& g, const Coloring& coloring) {
    for (const auto& v : g.vertices())
        if (!coloring.count(v)) throw std::invalid_argument("coloring misses vertex '" + v + "'");
    for (const auto& [u, v] : g.edges())
        if (coloring.at(u) == coloring.at(v)) return false;
    return true;
}

// 0-bend representations: horizontal paths take colors {0,1}, vertical take
// {2,3}; inside one grid line, paths sorted by coordinate only touch their
// immediate successor, so alternating two colors is enough.
inline Coloring color_b0(const CpgRepresentation& rep) {
    if (max_bends(rep) != 0) throw std::invalid_argument("representation has bends");

    struct Item {
        int lo, hi;
        std::string vertex;
    };
    std::map<int, std::vector<Item>> by_row, by_col;
    for (const auto& p : rep.paths) {
        const auto& a = p.corners.front();
        const auto& b = p.corners.back();
        if (a.row == b.row)
            by_row[a.row].push_back({std::min(a.col, b.col), std::max(a.col, b.col), p.vertex});
        else
            by_col[a.col].push_back({std::min(a.row, b.row), std::max(a.row, b.row), p.vertex});
    }

    Coloring coloring;
    auto color_line = [&](std::vector<Item>& items, int base) {
        std::sort(items.begin(), items.end(),
                  [](const Item& x, const Item& y) { return x.lo < y.lo; });
        int prev_hi = -1, prev_color = base + 1;
        for (const auto& it : items) {
            int c = (it.lo == prev_hi) ? (base + ((prev_color - base) ^ 1)) : base;
            coloring[it.vertex] = c;
            prev_hi = it.hi;
            prev_color = c;
        }
    };
    for (auto& [r, items] : by_row) color_line(items, 0);
    for (auto& [c, items] : by_col) color_line(items, 2);
    return coloring;
}

namespace detail {

// Constructive Brooks step for one connected 6-regular component: pick v with
// two nonadjacent neighbors u,w, color u,w alike, then greedy in an order that
// leaves every other vertex an uncolored neighbor until v comes last.
inline void brooks_color_component(const IndexedGraph& g, const std::vector<std::size_t>& comp,
                                   std::map<std::size_t, int>& color) {
    // find v, u, w
    std::size_t v = comp.front(), u = 0, w = 0;
    bool found = false;
    for (std::size_t cand : comp) {
        std::vector<std::size_t> nb;
        for (std::size_t x : comp)
            if (g.adj[cand].test(x)) nb.push_back(x);
        for (std::size_t i = 0; i < nb.size() && !found; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !found; ++j)
                if (!g.adj[nb[i]].test(nb[j])) {
                    v = cand;
                    u = nb[i];
                    w = nb[j];
                    found = true;
                }
        if (found) break;
    }
    if (!found) throw std::invalid_argument("hypothesis violated: 6-regular component is complete (K7)");

    // BFS distances from v
    std::map<std::size_t, int> dist;
    dist[v] = 0;
    std::vector<std::size_t> queue{v};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t x = queue[head];
        for (std::size_t y : comp)
            if (g.adj[x].test(y) && !dist.count(y)) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }

    color[u] = 0;
    color[w] = 0;
    std::vector<std::size_t> order;
    for (std::size_t x : comp)
        if (x != v && x != u && x != w) order.push_back(x);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dist.at(a) != dist.at(b)) return dist.at(a) > dist.at(b);
        return a < b;
    });
    order.push_back(v);

    for (std::size_t x : order) {
        unsigned used = 0;
        for (std::size_t y : comp)
            if (g.adj[x].test(y) && color.count(y)) used |= 1u << color.at(y);
        int c = 0;
        while (used & (1u << c)) ++c;
        if (c >= 6) throw std::logic_error("Brooks step exceeded six colors");
        color[x] = c;
    }
}

}  // namespace detail

// Proper <= 6 coloring for any graph consistent with being CPG: peel vertices
// of degree <= 5, greedy on re-insertion; a stalled residual must be
// 6-regular and is handled by the Brooks step.
inline Coloring color_cpg(const SimpleGraph& g) {
    IndexedGraph ig(g);
    std::vector<bool> removed(ig.n, false);
    std::vector<std::size_t> cur_deg(ig.n);
    for (std::size_t i = 0; i < ig.n; ++i) cur_deg[i] = ig.degree(i);

    std::vector<std::size_t> stack;
    std::size_t left = ig.n;
    while (left > 0) {
        std::size_t pick = ig.n;
        for (std::size_t i = 0; i < ig.n; ++i)
            if (!removed[i] && cur_deg[i] <= 5 && (pick == ig.n || cur_deg[i] < cur_deg[pick])) pick = i;
        if (pick == ig.n) break;  // residual has min degree >= 6
        removed[pick] = true;
        stack.push_back(pick);
        --left;
        for (std::size_t j = 0; j < ig.n; ++j)
            if (ig.adj[pick].test(j) && !removed[j]) --cur_deg[j];
    }

    std::map<std::size_t, int> color;
    if (left > 0) {
        for (std::size_t i = 0; i < ig.n; ++i)
            if (!removed[i] && cur_deg[i] != 6)
                throw std::invalid_argument("hypothesis violated: residual is neither low-degree nor 6-regular");
        std::vector<bool> seen(ig.n, false);
        for (std::size_t i = 0; i < ig.n; ++i) {
            if (removed[i] || seen[i]) continue;
            std::vector<std::size_t> comp{i};
            seen[i] = true;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (std::size_t j = 0; j < ig.n; ++j)
                    if (ig.adj[comp[head]].test(j) && !removed[j] && !seen[j]) {
                        seen[j] = true;
                        comp.push_back(j);
                    }
            detail::brooks_color_component(ig, comp, color);
        }
    }

    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        unsigned used = 0;
        for (std::size_t j = 0; j < ig.n; ++j)
            if (ig.adj[x].test(j) && color.count(j)) used |= 1u << color.at(j);
        int c = 0;
        while (used & (1u << c)) ++c;
        if (c >= 6) throw std::logic_error("greedy re-insertion exceeded six colors");
        color[x] = c;
    }

    Coloring out;
    for (const auto& [idx, c] : color) out[ig.labels[idx]] = c;
    return out;
}

namespace detail {

// DSATUR-ordered backtracking. `fixed` pins colors; when canonical is set,
// a vertex may use at most one color index beyond those already introduced.
inline bool kcolor_search(const IndexedGraph& g, int k, std::vector<int>& color,
                          int colored_count, int max_used, bool canonical) {
    const int n = static_cast<int>(g.n);
    if (colored_count == n) return true;

    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        unsigned mask = 0;
        for (int u = 0; u < n; ++u)
            if (g.adj[v].test(u) && color[u] >= 0) mask |= 1u << color[u];
        int sat = __builtin_popcount(mask);
        int deg = static_cast<int>(g.degree(v));
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    }

    unsigned banned = 0;
    for (int u = 0; u < n; ++u)
        if (g.adj[best].test(u) && color[u] >= 0) banned |= 1u << color[u];
    int limit = canonical ? std::min(k, max_used + 1) : k;
    for (int c = 0; c < limit; ++c) {
        if (banned & (1u << c)) continue;
        color[best] = c;
        if (kcolor_search(g, k, color, colored_count + 1, std::max(max_used, c + 1), canonical))
            return true;
        color[best] = -1;
    }
    return false;
}

}  // namespace detail

// Exact oracle: a proper k-coloring or an exhaustive refusal.
inline std::optional<Coloring> is_k_colorable(const SimpleGraph& g, int k) {
    if (k < 0 || k > 31) throw std::invalid_argument("color count out of range");
    if (g.vertex_count() == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    IndexedGraph ig(g);
    std::vector<int> color(ig.n, -1);
    if (!detail::kcolor_search(ig, k, color, 0, 0, /*canonical=*/true)) return std::nullopt;
    Coloring out;
    for (std::size_t i = 0; i < ig.n; ++i) out[ig.labels[i]] = color[i];
    return out;
}

// Same search with some colors pinned (colors are then semantically fixed,
// so no canonical restriction applies).
inline std::optional<Coloring> extend_to_k_coloring(const SimpleGraph& g, int k,
                                                    const Coloring& fixed) {
    if (k < 0 || k > 31) throw std::invalid_argument("color count out of range");
    IndexedGraph ig(g);
    std::vector<int> color(ig.n, -1);
    int colored = 0;
    for (std::size_t i = 0; i < ig.n; ++i) {
        auto it = fixed.find(ig.labels[i]);
        if (it != fixed.end()) {
            if (it->second < 0 || it->second >= k) throw std::invalid_argument("fixed color out of range");
            color[i] = it->second;
            ++colored;
        }
    }
    for (std::size_t i = 0; i < ig.n; ++i)
        for (std::size_t j = 0; j < ig.n; ++j)
            if (ig.adj[i].test(j) && color[i] >= 0 && color[i] == color[j]) return std::nullopt;
    if (colored == static_cast<int>(ig.n) ||
        detail::kcolor_search(ig, k, color, colored, k, /*canonical=*/false)) {
        Coloring out;
        for (std::size_t i = 0; i < ig.n; ++i) out[ig.labels[i]] = color[i];
        return out;
    }
    return std::nullopt;
}

}  // namespace cpg
