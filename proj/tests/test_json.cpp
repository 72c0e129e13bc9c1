#include <catch2/catch_amalgamated.hpp>

#include "cpg/catalog.hpp"
#include "cpg/json_io.hpp"
#include "cpg/svg.hpp"
#include "helpers.hpp"

using namespace cpg;

TEST_CASE("representation JSON round trips corner lists bit-exactly") {
    std::mt19937 rng(1212);
    for (int t = 0; t < 50; ++t) {
        auto rep = cpg_test::random_rep(rng, 6, 2);
        auto j = to_json(rep);
        auto back = rep_from_json(j);
        REQUIRE(back.rows == rep.rows);
        REQUIRE(back.cols == rep.cols);
        REQUIRE(back.paths.size() == rep.paths.size());
        for (std::size_t i = 0; i < rep.paths.size(); ++i) {
            REQUIRE(back.paths[i].vertex == rep.paths[i].vertex);
            REQUIRE(back.paths[i].corners == rep.paths[i].corners);
        }
        REQUIRE(dump(to_json(back)) == dump(j));  // byte-identical re-dump
    }
}

TEST_CASE("graph and coloring JSON round trips") {
    auto g = *fixture("fig3_nonplanar_b0")->graph;
    REQUIRE(graph_from_json(to_json(g)) == g);

    Coloring c{{"a", 0}, {"b", 2}};
    REQUIRE(coloring_from_json(to_json(c)) == c);
}

TEST_CASE("embedding JSON stores x,y as col,row") {
    auto emb = *fixture("orth_k4")->embedding;
    auto j = to_json(emb);
    auto back = embedding_from_json(j);
    REQUIRE(back.vertices == emb.vertices);
    REQUIRE(back.edges.size() == emb.edges.size());
    for (std::size_t i = 0; i < emb.edges.size(); ++i) {
        REQUIRE(back.edges[i].u == emb.edges[i].u);
        REQUIRE(back.edges[i].polyline == emb.edges[i].polyline);
    }
    // spot check the convention: vertex a sits at row 3, col 0 -> [0, 3]
    REQUIRE(j["vertices"]["a"][0] == 0);
    REQUIRE(j["vertices"]["a"][1] == 3);
}

TEST_CASE("negative coordinates are rejected at parse time") {
    json j = {{"rows", 2}, {"cols", 2}, {"paths", {{{"vertex", "a"}, {"corners", {{-1, 0}, {0, 0}}}}}}};
    REQUIRE_THROWS_AS(rep_from_json(j), std::invalid_argument);
}

TEST_CASE("svg rendering emits one polyline per path and leaves data alone") {
    auto rep = *fixture("fig7_k6_b2")->rep;
    auto before = dump(to_json(rep));
    auto svg = render_svg(rep);
    REQUIRE(svg.find("<svg") == 0);
    std::size_t polylines = 0, at = 0;
    while ((at = svg.find("<polyline", at)) != std::string::npos) {
        ++polylines;
        ++at;
    }
    REQUIRE(polylines == rep.paths.size());
    REQUIRE(dump(to_json(rep)) == before);
}
