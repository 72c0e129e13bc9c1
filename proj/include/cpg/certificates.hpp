// Checkable certificates for the structural results: the degree lemma, exact
// clique number / K7-freeness, the planar degree-3 bound, the triangle-free
// hypothesis, and desk-scale K3,3-minor search.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpg/contact.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

enum class Claim {
    DegreeLemma,
    B1Degree,
    K7Free,
    MaxPlanarDeg3Bound,
    TriangleFreeHypothesis,
    K33Minor,
    FourRegularSeven,
};

inline const char* to_string(Claim c) {
    switch (c) {
        case Claim::DegreeLemma: return "degree-lemma";
        case Claim::B1Degree: return "b1-degree";
        case Claim::K7Free: return "k7-free";
        case Claim::MaxPlanarDeg3Bound: return "maxplanar-deg3-bound";
        case Claim::TriangleFreeHypothesis: return "trianglefree-hypothesis";
        case Claim::K33Minor: return "k33-minor";
        case Claim::FourRegularSeven: return "four-regular-seven";
    }
    return "?";
}

struct Certificate {
    Claim claim;
    bool pass = false;
    nlohmann::json witness;  // claim-specific, checkable in isolation
};

// Pass iff the graph is 6-regular or has a vertex of degree at most 5;
// anything else cannot be a contact graph.
inline Certificate degree_certificate(const SimpleGraph& g) {
    Certificate cert{Claim::DegreeLemma, false, {}};
    if (g.vertex_count() == 0) {
        cert.pass = true;
        cert.witness["note"] = "empty graph";
        return cert;
    }
    std::string best;
    std::size_t best_deg = 0;
    bool six_regular = true;
    bool first = true;
    for (const auto& v : g.vertices()) {
        std::size_t d = g.degree(v);
        if (d != 6) six_regular = false;
        if (first || d < best_deg) {
            best = v;
            best_deg = d;
            first = false;
        }
    }
    if (six_regular) {
        cert.pass = true;
        cert.witness["six_regular"] = true;
    } else if (best_deg <= 5) {
        cert.pass = true;
        cert.witness["vertex"] = best;
        cert.witness["degree"] = best_deg;
    } else {
        cert.witness["min_degree"] = best_deg;
        cert.witness["vertex"] = best;
    }
    return cert;
}

namespace detail {

// Tomita-style branch and bound with a greedy-coloring upper bound.
struct CliqueSearch {
    const IndexedGraph& g;
    IndexedGraph::Mask best_clique;
    std::size_t best = 0;

    explicit CliqueSearch(const IndexedGraph& graph) : g(graph) {}

    // order candidates by greedy color class; bound = colors used
    void expand(IndexedGraph::Mask clique, IndexedGraph::Mask cand) {
        if (cand.none()) {
            if (clique.count() > best) {
                best = clique.count();
                best_clique = clique;
            }
            return;
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> color;
        {
            IndexedGraph::Mask left = cand;
            std::size_t col = 0;
            while (left.any()) {
                ++col;
                IndexedGraph::Mask cls = left;
                while (cls.any()) {
                    std::size_t v = 0;
                    while (!cls.test(v)) ++v;
                    order.push_back(v);
                    color.push_back(col);
                    left.reset(v);
                    cls.reset(v);
                    cls &= ~g.adj[v];
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (clique.count() + color[i] <= best) return;
            std::size_t v = order[i];
            IndexedGraph::Mask next_clique = clique;
            next_clique.set(v);
            expand(next_clique, cand & g.adj[v]);
            cand.reset(v);
        }
    }
};

}  // namespace detail

inline int clique_number(const SimpleGraph& g, std::vector<std::string>* witness = nullptr) {
    if (g.vertex_count() == 0) return 0;
    IndexedGraph ig(g);
    detail::CliqueSearch search(ig);
    IndexedGraph::Mask all;
    for (std::size_t i = 0; i < ig.n; ++i) all.set(i);
    search.expand({}, all);
    if (witness) {
        witness->clear();
        for (std::size_t i = 0; i < ig.n; ++i)
            if (search.best_clique.test(i)) witness->push_back(ig.labels[i]);
    }
    return static_cast<int>(search.best);
}

inline Certificate k7_check(const SimpleGraph& g) {
    Certificate cert{Claim::K7Free, false, {}};
    std::vector<std::string> clique;
    int omega = clique_number(g, &clique);
    cert.pass = omega <= 6;
    cert.witness["clique_number"] = omega;
    cert.witness["max_clique"] = clique;
    return cert;
}

// Planar CPG graphs have at most 4|V| - 2f + 4 vertices of degree <= 3
// (12 when maximally planar). Planarity itself is caller-asserted.
inline Certificate maxplanar_deg3_bound(const SimpleGraph& g, std::optional<int> faces = std::nullopt,
                                        bool maximally_planar = false) {
    const auto n = static_cast<int>(g.vertex_count());
    const auto m = static_cast<int>(g.edge_count());
    if (n == 0) throw std::invalid_argument("empty graph");

    // Euler's formula needs connectivity
    {
        std::vector<std::string> stack{*g.vertices().begin()};
        std::set<std::string> seen{stack.front()};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& w : g.neighbors(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != g.vertex_count())
            throw std::invalid_argument("inconsistent input: graph is not connected");
    }
    if (maximally_planar && m != 3 * n - 6)
        throw std::invalid_argument("inconsistent input: maximally planar requires |E| = 3|V|-6");

    int f = faces.value_or(m - n + 2);
    int bound = 4 * n - 2 * f + 4;

    std::vector<std::string> low;
    for (const auto& v : g.vertices())
        if (g.degree(v) <= 3) low.push_back(v);

    Certificate cert{Claim::MaxPlanarDeg3Bound, static_cast<int>(low.size()) <= bound, {}};
    cert.witness["faces"] = f;
    cert.witness["bound"] = bound;
    cert.witness["low_degree_count"] = low.size();
    cert.witness["low_degree_vertices"] = low;
    if (!cert.pass) cert.witness["conclusion"] = "not a CPG graph";
    return cert;
}

// Pass iff no grid-point of type I or II.a exists; a pass certifies the
// contact graph planar (the embedding itself is not constructed).
inline Certificate trianglefree_hypothesis(const CpgRepresentation& rep) {
    Certificate cert{Claim::TriangleFreeHypothesis, true, {}};
    for (const auto& [p, pc] : classify_all(rep)) {
        if (pc.tag == PointTag::TypeI || pc.tag == PointTag::TypeIIa) {
            cert.pass = false;
            cert.witness["point"] = {p.row, p.col};
            cert.witness["class"] = to_string(pc.tag);
            return cert;
        }
    }
    return cert;
}

// Pass iff max_bends(rep) <= 1 and the extraction has a vertex of degree <= 5.
inline Certificate b1_degree_certificate(const CpgRepresentation& rep) {
    Certificate cert{Claim::B1Degree, false, {}};
    int k = max_bends(rep);
    if (k > 1) throw std::invalid_argument("representation has more than one bend per path");
    SimpleGraph g = contact_graph(rep);
    for (const auto& v : g.vertices()) {
        if (g.degree(v) <= 5) {
            cert.pass = true;
            cert.witness["vertex"] = v;
            cert.witness["degree"] = g.degree(v);
            return cert;
        }
    }
    cert.witness["note"] = g.vertex_count() == 0 ? "empty graph" : "no low-degree vertex";
    cert.pass = g.vertex_count() == 0;
    return cert;
}

namespace detail {

// Branch-set search: assign vertices to {discard, S1..S6} with canonical
// introduction order, then check connectivity and bipartite completeness.
struct K33Search {
    const IndexedGraph& g;
    std::vector<int> label;  // -1 discard, 0..5 branch sets
    std::array<IndexedGraph::Mask, 6> sets{};
    std::optional<std::array<std::vector<std::string>, 6>> found;

    explicit K33Search(const IndexedGraph& graph) : g(graph), label(graph.n, -1) {}

    bool connected(const IndexedGraph::Mask& s) const {
        if (s.none()) return false;
        std::size_t start = 0;
        while (!s.test(start)) ++start;
        IndexedGraph::Mask seen;
        seen.set(start);
        IndexedGraph::Mask frontier = seen;
        while (frontier.any()) {
            IndexedGraph::Mask next;
            for (std::size_t v = 0; v < g.n; ++v)
                if (frontier.test(v)) next |= g.adj[v] & s;
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == s;
    }

    bool sets_touch(int a, int b) const {
        for (std::size_t v = 0; v < g.n; ++v)
            if (sets[a].test(v) && (g.adj[v] & sets[b]).any()) return true;
        return false;
    }

    void record() {
        std::array<std::vector<std::string>, 6> out;
        for (int s = 0; s < 6; ++s)
            for (std::size_t v = 0; v < g.n; ++v)
                if (sets[s].test(v)) out[s].push_back(g.labels[v]);
        found = out;
    }

    // Canonical labeling: within each side, sets open in vertex order; side B
    // cannot open before side A (kills the 3! x 3! x 2 set symmetry exactly).
    void rec(std::size_t v, int used_a, int used_b) {
        if (found) return;
        if (v == g.n) {
            if (used_a < 3 || used_b < 3) return;
            for (int s = 0; s < 6; ++s)
                if (!connected(sets[s])) return;
            for (int a = 0; a < 3; ++a)
                for (int b = 3; b < 6; ++b)
                    if (!sets_touch(a, b)) return;
            record();
            return;
        }
        auto attempt = [&](int s, int na, int nb) {
            sets[s].set(v);
            label[v] = s;
            rec(v + 1, na, nb);
            sets[s].reset(v);
            label[v] = -1;
        };
        for (int s = 0; s < used_a && !found; ++s) attempt(s, used_a, used_b);
        for (int s = 3; s < 3 + used_b && !found; ++s) attempt(s, used_a, used_b);
        if (used_a < 3 && !found) attempt(used_a, used_a + 1, used_b);
        if (used_b < 3 && used_a >= 1 && !found) attempt(3 + used_b, used_a, used_b + 1);
        if (!found) rec(v + 1, used_a, used_b);
    }
};

}  // namespace detail

// Exhaustive K3,3-minor test for graphs on at most 12 vertices. On success the
// witness carries six disjoint connected branch sets realizing K3,3.
inline bool has_k33_minor(const SimpleGraph& g,
                          std::array<std::vector<std::string>, 6>* witness = nullptr) {
    if (g.vertex_count() > 12) throw std::invalid_argument("size-limit exceeded: K3,3 minor search capped at 12 vertices");
    if (g.vertex_count() < 6 || g.edge_count() < 9) return false;
    IndexedGraph ig(g);
    detail::K33Search search(ig);
    search.rec(0, 0, 0);
    if (search.found && witness) *witness = *search.found;
    return search.found.has_value();
}

inline Certificate k33_certificate(const SimpleGraph& g) {
    Certificate cert{Claim::K33Minor, false, {}};
    std::array<std::vector<std::string>, 6> sets;
    cert.pass = has_k33_minor(g, &sets);
    if (cert.pass) {
        cert.witness["side_a"] = {sets[0], sets[1], sets[2]};
        cert.witness["side_b"] = {sets[3], sets[4], sets[5]};
    }
    return cert;
}

namespace detail {

// All 4-regular graphs on 7 labeled vertices, as adjacency bitmasks over the
// 21 vertex pairs, enumerated by degree-constrained backtracking.
inline void enumerate_4regular_7(std::vector<std::array<std::bitset<7>, 7>>& out) {
    std::array<std::bitset<7>, 7> adj{};
    std::array<int, 7> deg{};

    // pairs in lexicographic order, plus how many pairs touching v remain at
    // or after position k
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) pairs.emplace_back(i, j);
    std::array<std::array<int, 7>, 22> remaining{};
    for (std::size_t k = pairs.size(); k-- > 0;) {
        remaining[k] = remaining[k + 1];
        ++remaining[k][pairs[k].first];
        ++remaining[k][pairs[k].second];
    }

    auto rec = [&](auto&& self, std::size_t k) -> void {
        for (int v = 0; v < 7; ++v)
            if (deg[v] + remaining[k][v] < 4) return;
        if (k == pairs.size()) {
            out.push_back(adj);
            return;
        }
        auto [i, j] = pairs[k];
        for (int take = 1; take >= 0; --take) {
            if (take && (deg[i] >= 4 || deg[j] >= 4)) continue;
            if (take) {
                adj[i].set(j);
                adj[j].set(i);
                ++deg[i];
                ++deg[j];
            }
            self(self, k + 1);
            if (take) {
                adj[i].reset(j);
                adj[j].reset(i);
                --deg[i];
                --deg[j];
            }
        }
    };
    rec(rec, 0);
}

inline std::uint64_t canonical_form_7(const std::array<std::bitset<7>, 7>& adj) {
    std::array<int, 7> perm{0, 1, 2, 3, 4, 5, 6};
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t code = 0;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) {
                code <<= 1;
                code |= adj[perm[i]].test(perm[j]) ? 1 : 0;
            }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace detail

// Enumerates every 4-regular graph on 7 labeled vertices, deduplicates up to
// isomorphism, and checks each class for a K3,3 minor.
inline Certificate check_4regular_7_lemma() {
    std::vector<std::array<std::bitset<7>, 7>> graphs;
    detail::enumerate_4regular_7(graphs);

    std::map<std::uint64_t, std::array<std::bitset<7>, 7>> classes;
    for (const auto& adj : graphs) classes.emplace(detail::canonical_form_7(adj), adj);

    Certificate cert{Claim::FourRegularSeven, true, {}};
    cert.witness["labeled_graphs"] = graphs.size();
    cert.witness["isomorphism_classes"] = classes.size();
    auto witnesses = nlohmann::json::array();
    for (const auto& [code, adj] : classes) {
        SimpleGraph g;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (adj[i].test(j)) g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        std::array<std::vector<std::string>, 6> sets;
        bool ok = has_k33_minor(g, &sets);
        if (!ok) cert.pass = false;
        nlohmann::json w;
        w["canonical"] = code;
        w["has_k33_minor"] = ok;
        witnesses.push_back(w);
    }
    cert.witness["per_class"] = witnesses;
    return cert;
}

}  // namespace cpg
