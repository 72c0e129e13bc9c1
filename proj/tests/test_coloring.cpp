#include <catch2/catch_amalgamated.hpp>

#include "cpg/catalog.hpp"
#include "cpg/coloring.hpp"
#include "cpg/gadgets.hpp"
#include "helpers.hpp"

using namespace cpg;

TEST_CASE("verify_coloring") {
    auto k4 = SimpleGraph::complete({"a", "b", "c", "d"});
    REQUIRE(verify_coloring(k4, {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}}));
    REQUIRE_FALSE(verify_coloring(k4, {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 0}}));
    REQUIRE_THROWS_AS(verify_coloring(k4, Coloring{{"a", 0}}), std::invalid_argument);
}

TEST_CASE("color_b0 on the cross uses all four colors properly") {
    auto cross = *fixture("fig2_k4_cross")->rep;
    auto coloring = color_b0(cross);
    REQUIRE(verify_coloring(contact_graph(cross), coloring));
    std::set<int> used;
    for (const auto& [v, c] : coloring) {
        REQUIRE(c >= 0);
        REQUIRE(c <= 3);
        used.insert(c);
    }
    REQUIRE(used.size() == 4);  // K4 needs all four
}

TEST_CASE("color_b0 on fig3 and a single path") {
    auto fig3 = *fixture("fig3_nonplanar_b0")->rep;
    auto coloring = color_b0(fig3);
    REQUIRE(verify_coloring(contact_graph(fig3), coloring));

    CpgRepresentation lone;
    lone.rows = 1;
    lone.cols = 4;
    lone.paths = {{"solo", {{0, 0}, {0, 3}}}};
    REQUIRE(color_b0(lone).at("solo") == 0);

    REQUIRE_THROWS_AS(color_b0(*fixture("fig7_k6_b2")->rep), std::invalid_argument);
}

TEST_CASE("color_b0 is proper with at most 4 colors on random 0-bend reps") {
    std::mt19937 rng(808);
    for (int t = 0; t < 120; ++t) {
        auto rep = cpg_test::random_rep(rng, 8, 0);
        auto coloring = color_b0(rep);
        REQUIRE(verify_coloring(contact_graph(rep), coloring));
        for (const auto& [v, c] : coloring) {
            REQUIRE(c >= 0);
            REQUIRE(c <= 3);
        }
    }
}

TEST_CASE("color_cpg colors K6, fig5 and the 6-regular family") {
    auto k6 = SimpleGraph::complete({"1", "2", "3", "4", "5", "6"});
    auto c6 = color_cpg(k6);
    REQUIRE(verify_coloring(k6, c6));
    std::set<int> used;
    for (const auto& [v, c] : c6) used.insert(c);
    REQUIRE(used.size() == 6);

    auto fig5 = *fixture("fig5_maxplanar")->graph;
    auto c5 = color_cpg(fig5);
    REQUIRE(verify_coloring(fig5, c5));
    for (const auto& [v, c] : c5) REQUIRE(c < 6);
    REQUIRE(is_k_colorable(fig5, 4).has_value());
    REQUIRE_FALSE(is_k_colorable(fig5, 3).has_value());  // its chromatic number is 4

    // 6-regular: exercises the Brooks branch
    auto rep = six_regular_family(*fixture("octahedron")->embedding);
    auto loct = contact_graph(rep);
    auto brooks = color_cpg(loct);
    REQUIRE(verify_coloring(loct, brooks));
    for (const auto& [v, c] : brooks) REQUIRE(c < 6);
}

TEST_CASE("color_cpg rejects graphs breaking its hypothesis") {
    REQUIRE_THROWS_AS(color_cpg(SimpleGraph::complete(
                          {"1", "2", "3", "4", "5", "6", "7"})),
                      std::invalid_argument);  // K7: 6-regular but complete
}

TEST_CASE("color_cpg is proper with at most 6 colors on random extractions") {
    std::mt19937 rng(809);
    for (int t = 0; t < 100; ++t) {
        auto rep = cpg_test::random_rep(rng, 8, 2);
        auto g = contact_graph(rep);
        auto coloring = color_cpg(g);
        REQUIRE(verify_coloring(g, coloring));
        for (const auto& [v, c] : coloring) REQUIRE(c < 6);
    }
}

TEST_CASE("exact oracle: K4, C5, gadget H") {
    auto k4 = SimpleGraph::complete({"a", "b", "c", "d"});
    REQUIRE_FALSE(is_k_colorable(k4, 3).has_value());
    REQUIRE(is_k_colorable(k4, 4).has_value());

    SimpleGraph c5 = SimpleGraph::from_edges(
        {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
    auto found = is_k_colorable(c5, 3);
    REQUIRE(found.has_value());
    REQUIRE(verify_coloring(c5, *found));

    auto h = gadget_h();
    auto hc = is_k_colorable(h, 3);
    REQUIRE(hc.has_value());
    REQUIRE(verify_coloring(h, *hc));
    REQUIRE(hc->at("a") == hc->at("b"));
    REQUIRE(hc->at("b") != hc->at("c"));
}

TEST_CASE("oracle is monotone in k and agrees with verify_coloring") {
    std::mt19937 rng(810);
    for (int t = 0; t < 40; ++t) {
        auto g = cpg_test::random_graph(rng, 8, 0.5);
        bool prev = false;
        for (int k = 1; k <= 5; ++k) {
            auto coloring = is_k_colorable(g, k);
            if (coloring) {
                REQUIRE(verify_coloring(g, *coloring));
                for (const auto& [v, c] : *coloring) REQUIRE(c < k);
            }
            if (prev) REQUIRE(coloring.has_value());  // monotone
            prev = coloring.has_value();
        }
    }
}

TEST_CASE("partial extension respects pins") {
    auto hp = gadget_h_prime();
    auto ext = extend_to_k_coloring(hp, 3, {{"b", 0}, {"c", 1}});
    REQUIRE(ext.has_value());
    REQUIRE(ext->at("b") == 0);
    REQUIRE(ext->at("c") == 1);
    REQUIRE(verify_coloring(hp, *ext));
    REQUIRE_FALSE(extend_to_k_coloring(hp, 3, {{"b", 0}, {"c", 0}}).has_value());
}
