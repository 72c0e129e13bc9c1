#include <catch2/catch_amalgamated.hpp>

#include "cpg/catalog.hpp"
#include "cpg/coloring.hpp"
#include "cpg/reduction.hpp"

using namespace cpg;

namespace {

int count_gadgets(const ReductionOutput& out, bool want_h) {
    int n = 0;
    for (const auto& plan : out.plans)
        for (const auto& g : plan.gadgets) n += (g.is_h == want_h);
    return n;
}

void check_structure(const ReductionOutput& out) {
    REQUIRE(validate(out.rep).ok);
    REQUIRE(max_bends(out.rep) == 0);
    REQUIRE(contact_graph(out.rep) == out.gprime);
    // gadget counts: one H' per non-direct edge, one H per extra chain link
    int expected_hp = 0, expected_h = 0;
    for (const auto& plan : out.plans) {
        if (plan.direct) {
            REQUIRE(plan.chain.empty());
            continue;
        }
        ++expected_hp;
        expected_h += static_cast<int>(plan.chain.size()) - 2;
        REQUIRE(plan.chain.size() <= 4);  // at most 4 bends -> k <= 4
    }
    REQUIRE(count_gadgets(out, false) == expected_hp);
    REQUIRE(count_gadgets(out, true) == expected_h);
}

}  // namespace

TEST_CASE("reduction on the K4 embedding") {
    auto out = reduce_3col(*fixture("orth_k4")->embedding);
    check_structure(out);
    // dc is the only straight vertical edge; ad and db have one interior
    // segment each
    int direct = 0;
    for (const auto& plan : out.plans) direct += plan.direct;
    REQUIRE(direct == 1);
    REQUIRE(count_gadgets(out, false) == 5);
    REQUIRE(count_gadgets(out, true) == 2);

    // K4 is not 3-colorable, so neither is G'
    REQUIRE_FALSE(is_k_colorable(out.source, 3).has_value());
    REQUIRE_FALSE(is_k_colorable(out.gprime, 3).has_value());
}

TEST_CASE("reduction on the C5 embedding with coloring round trip") {
    auto out = reduce_3col(*fixture("orth_c5")->embedding);
    check_structure(out);
    REQUIRE(count_gadgets(out, false) == 4);
    REQUIRE(count_gadgets(out, true) == 0);

    auto c = is_k_colorable(out.source, 3);
    REQUIRE(c.has_value());
    auto extended = extend_coloring(out, *c);
    REQUIRE(verify_coloring(out.gprime, extended));
    auto back = restrict_coloring(out, extended);
    REQUIRE(back == *c);

    // an oracle coloring of G' restricts to a proper coloring of C5
    auto cprime = is_k_colorable(out.gprime, 3);
    REQUIRE(cprime.has_value());
    auto restricted = restrict_coloring(out, *cprime);
    REQUIRE(verify_coloring(out.source, restricted));
}

TEST_CASE("reduction on the appendix fragment") {
    auto out = reduce_3col(*fixture("orth_fullexample")->embedding);
    check_structure(out);
    // us is straight vertical; vu and uw carry one interior segment each
    int direct = 0;
    for (const auto& plan : out.plans) direct += plan.direct;
    REQUIRE(direct == 1);
    REQUIRE(count_gadgets(out, false) == 3);
    REQUIRE(count_gadgets(out, true) == 2);

    // the star is 3-colorable and so must be G'
    auto c = is_k_colorable(out.source, 3);
    REQUIRE(c.has_value());
    auto extended = extend_coloring(out, *c);
    REQUIRE(verify_coloring(out.gprime, extended));
}

TEST_CASE("provenance covers every G' vertex") {
    auto out = reduce_3col(*fixture("orth_c5")->embedding);
    for (const auto& v : out.gprime.vertices()) {
        REQUIRE(out.provenance.count(v) == 1);
        const auto& p = out.provenance.at(v);
        if (p.kind == Provenance::Kind::Copy) REQUIRE(out.source.has_vertex(v));
    }
}

TEST_CASE("coloring preconditions are enforced") {
    auto out = reduce_3col(*fixture("orth_c5")->embedding);
    Coloring bad;
    for (const auto& v : out.source.vertices()) bad[v] = 0;
    REQUIRE_THROWS_AS(extend_coloring(out, bad), std::invalid_argument);
    Coloring offrange;
    for (const auto& v : out.gprime.vertices()) offrange[v] = 5;
    REQUIRE_THROWS_AS(restrict_coloring(out, offrange), std::invalid_argument);
}

TEST_CASE("invalid embeddings are rejected") {
    OrthogonalEmbedding emb = *fixture("orth_c5")->embedding;
    emb.edges[0].polyline = {{0, 0}, {1, 1}};  // diagonal
    REQUIRE_THROWS_AS(reduce_3col(emb), std::invalid_argument);
}
