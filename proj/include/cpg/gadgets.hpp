// The coloring gadgets H and H' used by the 3-colorability reduction, their
// 0-bend representations, and exhaustive verification of their color-forcing
// behavior.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cpg/coloring.hpp"
#include "cpg/contact.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

// 13 vertices {a,b,c,1..10}, 24 edges.
inline SimpleGraph gadget_h() {
    return SimpleGraph::from_edges({
        {"a", "1"}, {"a", "2"}, {"a", "3"},
        {"1", "b"}, {"1", "4"},
        {"2", "b"}, {"2", "6"},
        {"3", "b"}, {"3", "8"},
        {"b", "4"}, {"b", "6"}, {"b", "8"},
        {"4", "5"}, {"4", "7"},
        {"6", "7"}, {"6", "c"}, {"6", "9"},
        {"8", "9"}, {"8", "10"},
        {"7", "5"}, {"7", "9"},
        {"9", "10"},
        {"5", "c"}, {"10", "c"},
    });
}

// Subgraph of H induced by {b,c,4..10}: 9 vertices, 15 edges.
inline SimpleGraph gadget_h_prime() {
    return gadget_h().induced({"b", "c", "4", "5", "6", "7", "8", "9", "10"});
}

// The 0-bend representation of H, with half-integer figure coordinates doubled.
inline CpgRepresentation gadget_h_rep() {
    CpgRepresentation rep;
    rep.rows = 10;
    rep.cols = 10;
    auto add = [&](const std::string& v, int r1, int c1, int r2, int c2) {
        rep.paths.push_back({v, {{r1, c1}, {r2, c2}}});
    };
    add("a", 3, 2, 9, 2);
    add("b", 3, 4, 9, 4);
    add("c", 3, 8, 9, 8);
    add("3", 4, 2, 4, 4);
    add("2", 6, 2, 6, 4);
    add("1", 8, 2, 8, 4);
    add("8", 4, 4, 4, 6);
    add("6", 6, 4, 6, 8);
    add("4", 8, 4, 8, 6);
    add("9", 4, 6, 6, 6);
    add("7", 6, 6, 8, 6);
    add("10", 4, 6, 4, 8);
    add("5", 8, 6, 8, 8);
    return rep;
}

inline CpgRepresentation gadget_h_prime_rep() {
    CpgRepresentation rep = gadget_h_rep();
    std::erase_if(rep.paths, [](const GridPath& p) {
        return p.vertex == "a" || p.vertex == "1" || p.vertex == "2" || p.vertex == "3";
    });
    return compact(rep);
}

struct GadgetClaimReport {
    bool h_prime_b_neq_c = false;          // every proper 3-coloring of H' has c(b) != c(c)
    bool h_a_eq_b_and_b_neq_c = false;     // every proper 3-coloring of H has c(a)=c(b), c(b)!=c(c)
    bool distinct_bc_extends = false;      // every distinct (b,c) pre-coloring extends to H' and H
    long long h_proper_colorings = 0;
    long long h_prime_proper_colorings = 0;
    bool all() const { return h_prime_b_neq_c && h_a_eq_b_and_b_neq_c && distinct_bc_extends; }
};

namespace detail {

// Enumerates every proper 3-coloring (pruned depth-first over all 3^n
// assignments) and applies `check` to each one found.
template <typename Check>
inline long long enumerate_3colorings(const SimpleGraph& g, Check&& check) {
    IndexedGraph ig(g);
    std::vector<int> color(ig.n, -1);
    long long count = 0;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == ig.n) {
            ++count;
            Coloring full;
            for (std::size_t i = 0; i < ig.n; ++i) full[ig.labels[i]] = color[i];
            check(full);
            return;
        }
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < v && ok; ++j)
                if (ig.adj[v].test(j) && color[j] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            self(self, v + 1);
            color[v] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace detail

// Exhaustively enumerates all proper 3-colorings of H and H' and checks the
// color-forcing claims, plus extendability of every distinct (b,c) pair.
inline GadgetClaimReport verify_gadget_claims() {
    GadgetClaimReport report;
    SimpleGraph h = gadget_h();
    SimpleGraph hp = gadget_h_prime();

    bool hp_ok = true;
    report.h_prime_proper_colorings = detail::enumerate_3colorings(hp, [&](const Coloring& c) {
        if (c.at("b") == c.at("c")) hp_ok = false;
    });
    report.h_prime_b_neq_c = hp_ok && report.h_prime_proper_colorings > 0;

    bool h_ok = true;
    report.h_proper_colorings = detail::enumerate_3colorings(h, [&](const Coloring& c) {
        if (c.at("a") != c.at("b") || c.at("b") == c.at("c")) h_ok = false;
    });
    report.h_a_eq_b_and_b_neq_c = h_ok && report.h_proper_colorings > 0;

    bool extends = true;
    for (int cb = 0; cb < 3 && extends; ++cb)
        for (int cc = 0; cc < 3 && extends; ++cc) {
            if (cb == cc) continue;
            Coloring pre{{"b", cb}, {"c", cc}};
            if (!extend_to_k_coloring(hp, 3, pre)) extends = false;
            if (!extend_to_k_coloring(h, 3, pre)) extends = false;
        }
    report.distinct_bc_extends = extends;
    return report;
}

}  // namespace cpg
