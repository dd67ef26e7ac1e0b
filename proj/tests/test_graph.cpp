#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "singlat/graph.hpp"

#include <random>

using namespace singlat;

TEST_CASE("parse gamma") {
    const auto g = fixtures::gamma();
    REQUIRE(g.size() == 7);
    CHECK(g.vertex(0).id == "E_0");
    CHECK(g.vertex(0).euler == -13);
    CHECK(g.vertex(5).euler == -1);
    CHECK(g.edges().size() == 6);
    CHECK(g.is_tree());
    CHECK(g.all_rational());
    CHECK(g.valence(5) == 3);
    CHECK(g.neighbours(6) == std::vector<std::size_t>{0, 1, 2});
    CHECK(g.index_of("E_4") == 4);
    CHECK(!g.find("E_9"));
    CHECK_THROWS_AS(g.index_of("E_9"), Error);
}

TEST_CASE("parse genus and comments") {
    const auto g = parse_graph("vertex a -3 genus=2  # elliptic\n\n# nothing\nvertex b -2\nedge a b\n");
    CHECK(g.vertex(0).genus == 2);
    CHECK(g.vertex(1).genus == 0);
    CHECK(!g.all_rational());
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("vertex a -2\nvertex a -3\n") == 2);
    CHECK(line_of("vertex a -2\nedge a a\n") == 2);
    CHECK(line_of("vertex a -2\nvertex b -2\nedge a b\nedge b a\n") == 4);
    CHECK(line_of("vertex a -2\nedge a z\n") == 2);
    CHECK(line_of("vertex a x\n") == 1);
    CHECK(line_of("vertex a -2 genus=-1\n") == 1);
    CHECK(line_of("node a -2\n") == 1);
    CHECK(line_of("vertex a -2\nvertex b -2\n") == 0);
    CHECK(line_of("# empty\n") == 0);
}

TEST_CASE("intersection matrix") {
    const auto m = intersection_matrix(fixtures::gamma());
    CHECK(m(0, 0) == -13);
    CHECK(m(0, 5) == 1);
    CHECK(m(5, 0) == 1);
    CHECK(m(1, 2) == 0);
    CHECK(m(6, 6) == -1);
}

TEST_CASE("definiteness examples") {
    const auto d = definiteness(fixtures::gamma());
    CHECK(d.det_neg_m == 1);
    CHECK(d.negative_definite);
    CHECK(d.negative_semidefinite);

    const auto ext = extend_with_minus_one(fixtures::gamma(), "E_0");
    const auto de = definiteness(ext);
    CHECK(!de.negative_definite);
    CHECK(de.negative_semidefinite);
    CHECK(de.det_neg_m == 0);

    const auto plus = definiteness(fixtures::single(1));
    CHECK(!plus.negative_definite);
    CHECK(!plus.negative_semidefinite);

    CHECK(definiteness(fixtures::single(-2)).det_neg_m == 2);
    CHECK(definiteness(fixtures::e8()).det_neg_m == 1);
}

TEST_CASE("kodaira extension") {
    const auto ext = extend_with_minus_one(fixtures::gamma(), "E_0");
    REQUIRE(ext.size() == 8);
    CHECK(ext.vertex(7).id == "7");
    CHECK(ext.vertex(7).euler == -1);
    CHECK(ext.neighbours(7) == std::vector<std::size_t>{0});

    const auto g = parse_graph("vertex 1 -2\n");
    CHECK(extend_with_minus_one(g, "1").vertex(1).id == "1'");

    const auto a = extend_with_minus_one(fixtures::single(-2), "a");
    CHECK(definiteness(a).negative_definite);
    CHECK_THROWS_AS(extend_with_minus_one(fixtures::gamma(), "nope"), Error);
}

TEST_CASE("minimal good") {
    CHECK(is_minimal_good(fixtures::gamma()).minimal);
    const auto r = is_minimal_good(fixtures::chain({-2, -1, -3}));
    CHECK(!r.minimal);
    CHECK(r.contractible == std::vector<std::string>{"v1"});
    CHECK(is_minimal_good(fixtures::star237()).minimal);
}

TEST_CASE("serialize round trip") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto g = oracle::random_graph(rng, 7, -6, 2);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    const auto h = parse_graph("vertex a -3 genus=2\nvertex b -2\nedge a b\n");
    CHECK(parse_graph(serialize_graph(h)) == h);
}

TEST_CASE("definiteness agrees with minors on random graphs") {
    std::mt19937_64 rng(2024);
    int definite = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto g = oracle::random_graph(rng, 6, -4, 1);
        const auto d = definiteness(g);
        CHECK(d.negative_definite == oracle::negative_definite(g));
        CHECK(d.negative_semidefinite == oracle::negative_semidefinite(g));
        CHECK(d.det_neg_m == oracle::cofactor_det(oracle::neg_form(g)));
        if (d.negative_definite) {
            CHECK(d.negative_semidefinite);
            ++definite;
        }
    }
    CHECK(definite > 50);
}
