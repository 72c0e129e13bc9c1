#include <catch2/catch_amalgamated.hpp>

#include "cpg/catalog.hpp"
#include "cpg/certificates.hpp"
#include "cpg/linegraph.hpp"
#include "helpers.hpp"

using namespace cpg;

namespace {
SimpleGraph complete(int n) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    return SimpleGraph::complete(vs);
}
}  // namespace

TEST_CASE("degree certificate") {
    REQUIRE(degree_certificate(complete(4)).pass);   // min degree 3
    REQUIRE(degree_certificate(complete(7)).pass);   // K7 is 6-regular
    REQUIRE_FALSE(degree_certificate(complete(8)).pass);

    auto oct = fixture("octahedron");
    auto rep = six_regular_family(*oct->embedding);
    auto cert = degree_certificate(contact_graph(rep));
    REQUIRE(cert.pass);
    REQUIRE(cert.witness.contains("six_regular"));
}

TEST_CASE("clique number and K7 check") {
    std::vector<std::string> w;
    REQUIRE(clique_number(complete(6), &w) == 6);
    REQUIRE(w.size() == 6);
    REQUIRE(k7_check(complete(6)).pass);
    REQUIRE_FALSE(k7_check(complete(7)).pass);
    REQUIRE(clique_number(complete(7)) == 7);

    SimpleGraph c5 = SimpleGraph::from_edges(
        {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
    REQUIRE(clique_number(c5) == 2);

    // cross-check against the coloring-free definition on random graphs
    std::mt19937 rng(505);
    for (int t = 0; t < 30; ++t) {
        auto g = cpg_test::random_graph(rng, 8, 0.5);
        int omega = clique_number(g);
        // brute force over all subsets
        std::vector<std::string> vs(g.vertices().begin(), g.vertices().end());
        int best = 0;
        for (unsigned mask = 0; mask < (1u << vs.size()); ++mask) {
            bool clique = true;
            for (std::size_t i = 0; i < vs.size() && clique; ++i)
                for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
                    if ((mask >> i & 1) && (mask >> j & 1) && !g.adjacent(vs[i], vs[j]))
                        clique = false;
            if (clique) best = std::max(best, __builtin_popcount(mask));
        }
        REQUIRE(omega == best);
    }
}

TEST_CASE("planar degree-3 bound") {
    auto fig6a = fixture("fig6a_not_cpg")->graph;
    auto cert = maxplanar_deg3_bound(*fig6a, std::nullopt, true);
    REQUIRE_FALSE(cert.pass);
    REQUIRE(cert.witness["low_degree_count"] == 13);
    REQUIRE(cert.witness["bound"] == 12);

    auto fig5 = fixture("fig5_maxplanar")->graph;
    auto cert5 = maxplanar_deg3_bound(*fig5, std::nullopt, true);
    REQUIRE(cert5.pass);
    REQUIRE(cert5.witness["low_degree_count"] == 3);

    // K4 with f = 4: bound = 4*4 - 8 + 4 = 12 >= 4
    auto k4 = complete(4);
    auto cert4 = maxplanar_deg3_bound(k4, 4, false);
    REQUIRE(cert4.pass);
    REQUIRE(cert4.witness["bound"] == 12);
    REQUIRE(cert4.witness["low_degree_count"] == 4);

    // inconsistent inputs
    SimpleGraph path = SimpleGraph::from_edges({{"a", "b"}, {"b", "c"}});
    REQUIRE_THROWS_AS(maxplanar_deg3_bound(path, std::nullopt, true), std::invalid_argument);
    SimpleGraph disconnected;
    disconnected.add_edge("a", "b");
    disconnected.add_vertex("z");
    REQUIRE_THROWS_AS(maxplanar_deg3_bound(disconnected), std::invalid_argument);
}

TEST_CASE("triangle-free hypothesis checker") {
    // two touching unit segments: no type I or II.a point anywhere
    CpgRepresentation rep;
    rep.rows = 2;
    rep.cols = 3;
    rep.paths = {{"a", {{0, 0}, {0, 1}}}, {"b", {{0, 1}, {0, 2}}}};
    REQUIRE(trianglefree_hypothesis(rep).pass);

    auto cross = fixture("fig2_k4_cross")->rep;
    auto cert = trianglefree_hypothesis(*cross);
    REQUIRE_FALSE(cert.pass);
    REQUIRE(cert.witness["class"] == "type-I");

    auto fig3 = fixture("fig3_nonplanar_b0")->rep;
    auto cert3 = trianglefree_hypothesis(*fig3);
    REQUIRE_FALSE(cert3.pass);
    REQUIRE(cert3.witness["class"] == "type-II.a");
}

TEST_CASE("K3,3 minor search") {
    SimpleGraph k33;
    for (std::string a : {"a1", "a2", "a3"})
        for (std::string b : {"b1", "b2", "b3"}) k33.add_edge(a, b);
    std::array<std::vector<std::string>, 6> sets;
    REQUIRE(has_k33_minor(k33, &sets));
    for (const auto& s : sets) REQUIRE(s.size() == 1);

    SimpleGraph tree = SimpleGraph::from_edges(
        {{"r", "a"}, {"r", "b"}, {"a", "c"}, {"a", "d"}, {"b", "e"}, {"b", "f"}, {"e", "g"}});
    REQUIRE_FALSE(has_k33_minor(tree));

    REQUIRE(has_k33_minor(*fixture("fig3_nonplanar_b0")->graph));

    // complement of C7 is 4-regular on 7 vertices
    SimpleGraph c7bar;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            int d = (j - i) % 7;
            if (d != 1 && d != 6) c7bar.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        }
    REQUIRE(has_k33_minor(c7bar));
}

TEST_CASE("K3,3 minor search agrees with the exhaustive oracle") {
    // every graph on 5 vertices (none has the minor), then random 6..8-vertex graphs
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        SimpleGraph g;
        for (int i = 0; i < 5; ++i) g.add_vertex("v" + std::to_string(i));
        int bit = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++bit)
                if (mask >> bit & 1) g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        REQUIRE_FALSE(has_k33_minor(g));
    }

    std::mt19937 rng(606);
    int agree_true = 0;
    for (int t = 0; t < 40; ++t) {
        int n = 6 + t % 3;
        double p = 0.35 + 0.1 * (t % 5);
        auto g = cpg_test::random_graph(rng, n, p);
        bool fast = has_k33_minor(g);
        bool slow = cpg_test::k33_minor_oracle(g);
        REQUIRE(fast == slow);
        if (fast) ++agree_true;
    }
    REQUIRE(agree_true > 0);  // the sample must hit both outcomes
}

TEST_CASE("every 4-regular graph on 7 vertices has a K3,3 minor") {
    auto cert = check_4regular_7_lemma();
    REQUIRE(cert.pass);
    // complements of 2-regular graphs on 7 vertices: C7 and C3+C4
    REQUIRE(cert.witness["isomorphism_classes"] == 2);
    REQUIRE(cert.witness["labeled_graphs"] == 465);
}

TEST_CASE("structural certificates hold on random extractions") {
    std::mt19937 rng(707);
    for (int t = 0; t < 80; ++t) {
        auto rep = cpg_test::random_rep(rng, 7, 2);
        auto g = contact_graph(rep);
        REQUIRE(degree_certificate(g).pass);
        REQUIRE(k7_check(g).pass);
    }
    for (int t = 0; t < 80; ++t) {
        auto rep = cpg_test::random_rep(rng, 7, 1);
        auto cert = b1_degree_certificate(rep);
        REQUIRE(cert.pass);
    }
}
