#include <catch2/catch_amalgamated.hpp>

#include "cpg/catalog.hpp"
#include "cpg/certificates.hpp"
#include "cpg/contact.hpp"
#include "cpg/linegraph.hpp"

using namespace cpg;

TEST_CASE("every catalog representation validates and extracts as expected") {
    for (const auto& entry : fixtures()) {
        INFO(entry.name);
        if (entry.rep) {
            REQUIRE(validate(*entry.rep).ok);
            if (entry.expected_max_bends) REQUIRE(max_bends(*entry.rep) == *entry.expected_max_bends);
            if (entry.graph) REQUIRE(contact_graph(*entry.rep) == *entry.graph);
        }
        if (entry.embedding) {
            REQUIRE_NOTHROW(validate_embedding(*entry.embedding));
            if (entry.graph && !entry.rep)
                REQUIRE(entry.embedding->abstract_graph() == *entry.graph);
        }
    }
}

TEST_CASE("catalog graphs pass the structural certificates") {
    for (const auto& entry : fixtures()) {
        INFO(entry.name);
        if (!entry.rep) continue;
        auto g = contact_graph(*entry.rep);
        REQUIRE(degree_certificate(g).pass);
        REQUIRE(k7_check(g).pass);
    }
}

TEST_CASE("fig6a fails the degree-3 bound while fig5 passes with a representation") {
    auto fig6a = *fixture("fig6a_not_cpg")->graph;
    REQUIRE(fig6a.vertex_count() == 22);
    REQUIRE(fig6a.edge_count() == 60);  // 3n - 6: maximally planar
    REQUIRE(fig6a.edge_count() == 3 * fig6a.vertex_count() - 6);
    int deg3 = 0;
    for (const auto& v : fig6a.vertices())
        if (fig6a.degree(v) <= 3) ++deg3;
    REQUIRE(deg3 == 13);
    REQUIRE_FALSE(maxplanar_deg3_bound(fig6a, std::nullopt, true).pass);

    auto fig5entry = fixture("fig5_maxplanar");
    REQUIRE(maxplanar_deg3_bound(*fig5entry->graph, std::nullopt, true).pass);
    REQUIRE(validate(*fig5entry->rep).ok);
    REQUIRE(contact_graph(*fig5entry->rep) == *fig5entry->graph);
}

TEST_CASE("fig3 witnesses a nonplanar B0 graph") {
    auto entry = fixture("fig3_nonplanar_b0");
    REQUIRE(max_bends(*entry->rep) == 0);
    REQUIRE(has_k33_minor(*entry->graph));
}

TEST_CASE("the six-regular family realizes L(G) with type I vertex points") {
    auto entry = fixture("octahedron");
    auto emb = *entry->embedding;
    auto rep = six_regular_family(emb);
    REQUIRE(validate(rep).ok);

    auto extraction = contact_graph(rep);
    REQUIRE(extraction == line_graph(*entry->graph));
    REQUIRE(extraction.vertex_count() == 12);
    for (const auto& v : extraction.vertices()) REQUIRE(extraction.degree(v) == 6);

    for (const auto& [name, p] : emb.vertices) {
        auto pc = classify_point(rep, p);
        INFO(name);
        REQUIRE(pc.tag == PointTag::TypeI);
    }

    SimpleGraph not4reg = SimpleGraph::complete({"a", "b", "c"});
    OrthogonalEmbedding bad;
    bad.vertices = {{"a", {0, 0}}, {"b", {0, 2}}};
    bad.edges = {{"a", "b", {{0, 0}, {0, 2}}}};
    REQUIRE_THROWS_AS(six_regular_family(bad), std::invalid_argument);
}

TEST_CASE("fixture lookup by name") {
    REQUIRE(fixture("fig7_k6_b2").has_value());
    REQUIRE_FALSE(fixture("nonexistent").has_value());
    REQUIRE(fixtures().size() == 11);
}
