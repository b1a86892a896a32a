#include "fewcol/covering.hpp"
#include "fewcol/graph.hpp"
#include "fewcol/independence.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <stdexcept>

#include <random>

using namespace fewcol;

TEST_CASE("build_graph: smallest coloured graph") {
    const ColouredGraph g = build_graph(2, 1, {{0, 1, 1}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.colour_count() == 1);
    CHECK(g.colour_of(0, 1) == 1);
    CHECK(g.colour_of(1, 0) == 1);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("build_graph: coloured triangle") {
    const ColouredGraph g = build_graph(3, 2, {{0, 1, 1}, {1, 2, 2}, {0, 2, 1}});
    CHECK(g.colour_of(0, 1) == 1);
    CHECK(g.colour_of(0, 2) == 1);
    CHECK(g.colour_of(1, 2) == 2);
    const auto edges = g.edges();
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == Edge{0, 1, 1});
    CHECK(edges[1] == Edge{0, 2, 1});
    CHECK(edges[2] == Edge{1, 2, 2});
}

TEST_CASE("build_graph: rejections") {
    CHECK_THROWS_AS(build_graph(2, 1, {{0, 1, 1}, {1, 0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, 1, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, 1, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, 1, {{0, 1, 2}}), std::invalid_argument);
    // duplicates that agree are fine
    CHECK_NOTHROW(build_graph(2, 1, {{0, 1, 1}, {1, 0, 1}}));
}

namespace {

ColouredGraph complete_graph(int n, int colour, int r) {
    GraphBuilder b(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v, colour);
    return std::move(b).build();
}

} // namespace

TEST_CASE("independence_number: cliques and empty graphs") {
    CHECK(independence_number(complete_graph(5, 1, 1)) == 1);
    CHECK(independence_number(build_graph(4, 1, {})) == 4);
}

TEST_CASE("independence_number: budget exhaustion reports instead of answering") {
    std::mt19937_64 rng(7);
    const ColouredGraph g = testsupport::random_graph(20, 2, 0.5, rng);
    CHECK_FALSE(independence_number(g, 2).has_value());
    CHECK(independence_number(g).has_value());
}

TEST_CASE("independence_number agrees with exhaustive search on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + int(rng() % 17); // up to 18 vertices
        const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        const ColouredGraph g = testsupport::random_graph(n, 3, p, rng);
        const auto exact = independence_number(g);
        REQUIRE(exact.has_value());
        CHECK(*exact == testsupport::brute_independence(g));
    }
}

TEST_CASE("colour_profile: complete bipartite count and empty profile") {
    const ColouredGraph k4 = complete_graph(4, 1, 1);
    const auto profile =
        colour_profile(k4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3}));
    REQUIRE(profile.size() == 1);
    CHECK(profile.at(1) == 4);

    const ColouredGraph sparse = build_graph(4, 2, {{0, 1, 1}});
    CHECK(colour_profile(sparse, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})).empty());
}

TEST_CASE("colour_profile: triangle split by colour") {
    const ColouredGraph g = build_graph(3, 2, {{0, 1, 1}, {1, 2, 2}, {0, 2, 1}});
    const auto profile = colour_profile(g, VertexSet::of(3, {1}), VertexSet::of(3, {0, 2}));
    REQUIRE(profile.size() == 2);
    CHECK(profile.at(1) == 1);
    CHECK(profile.at(2) == 1);
}

TEST_CASE("colour_profile rejects overlapping sets") {
    const ColouredGraph g = complete_graph(3, 1, 1);
    CHECK_THROWS_AS(colour_profile(g, VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("colour_profile sums to the bipartite edge count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + int(rng() % 10);
        const ColouredGraph g = testsupport::random_graph(n, 3, 0.6, rng);
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) (rng() % 2 ? a : b).insert(v);
        std::int64_t direct = 0;
        a.for_each([&](int u) {
            b.for_each([&](int v) { direct += g.adjacent(u, v); });
        });
        std::int64_t via_profile = 0;
        for (const auto& [colour, count] : colour_profile(g, a, b)) via_profile += count;
        CHECK(via_profile == direct);
    }
}

TEST_CASE("validate_covering: monochromatic triangle cases") {
    const ColouredGraph g = complete_graph(3, 1, 1);

    Covering full{{MonoPiece::path({0, 1, 2}, 1)}};
    CHECK(validate_covering(g, full, 1).valid);

    Covering partial{{MonoPiece::path({0, 1}, 1)}};
    const CoverReport rep = validate_covering(g, partial, 1);
    CHECK_FALSE(rep.valid);
    CHECK(rep.failures.empty());
    CHECK(rep.uncovered.contains(2));
}

TEST_CASE("validate_covering: miscoloured edge is reported") {
    const ColouredGraph g = build_graph(3, 2, {{0, 1, 1}, {1, 2, 2}, {0, 2, 1}});
    Covering s{{MonoPiece::path({0, 1, 2}, 1)}};
    const CoverReport rep = validate_covering(g, s, 1);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].first == 0);
}

TEST_CASE("validate_covering: structural failures") {
    const ColouredGraph g = complete_graph(4, 1, 2);
    SUBCASE("repeated vertex") {
        Covering s{{MonoPiece::path({0, 1, 0}, 1), MonoPiece::singleton(2),
                    MonoPiece::singleton(3)}};
        CHECK_FALSE(validate_covering(g, s, 2).failures.empty());
    }
    SUBCASE("coloured singleton") {
        Covering s{{MonoPiece{{0}, 1}, MonoPiece::path({1, 2, 3}, 1)}};
        CHECK_FALSE(validate_covering(g, s, 2).valid);
    }
    SUBCASE("colourless long piece") {
        Covering s{{MonoPiece{{0, 1, 2, 3}, kNoColour}}};
        CHECK_FALSE(validate_covering(g, s, 2).valid);
    }
    SUBCASE("colour budget") {
        const ColouredGraph h = build_graph(4, 2, {{0, 1, 1}, {2, 3, 2}});
        Covering s{{MonoPiece::path({0, 1}, 1), MonoPiece::path({2, 3}, 2)}};
        CHECK(validate_covering(h, s, 2).valid);
        CHECK_FALSE(validate_covering(h, s, 1).valid);
    }
}
