#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hamsieve/graph.hpp"
#include "hamsieve/oracle.hpp"
#include "hamsieve/random.hpp"
#include "test_support.hpp"

using namespace hamsieve;
using testsupport::make_graph;

TEST_CASE("parses a plain edge list") {
    const DirectedGraph g = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.arc_count() == 3);
    CHECK(g.arcs()[0] == Arc{0, 1});
    CHECK(g.arcs()[1] == Arc{1, 2});
    CHECK(g.arcs()[2] == Arc{2, 0});
}

TEST_CASE("comments and blank lines are skipped") {
    const std::string text =
        "# a triangle\n"
        "\n"
        "3 3   # header\n"
        "0 1\n"
        "  \n"
        "1 2\n"
        "2 0  # last arc\n";
    const DirectedGraph g = parse_graph(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.arc_count() == 3);
}

TEST_CASE("a graph may have no arcs") {
    const DirectedGraph g = parse_graph("2 0\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.arc_count() == 0);
}

TEST_CASE("malformed input is rejected with the offending line") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n"), ParseError);        // missing arc line
    CHECK_THROWS_AS(parse_graph("2 1\n0 1\n1 0\n"), ParseError);  // extra arc line
    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), ParseError);   // head out of range
    CHECK_THROWS_AS(parse_graph("2 1\n0\n"), ParseError);     // truncated arc

    try {
        parse_graph("3 2\n0 1\n1 1\n");
        FAIL("self-loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_graph("3 3\n0 1\n1 2\n0 1\n");
        FAIL("duplicate arc accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("constructor validates arcs directly") {
    CHECK_THROWS(DirectedGraph(2, {{0, 0}}));
    CHECK_THROWS(DirectedGraph(2, {{0, 1}, {0, 1}}));
    CHECK_THROWS(DirectedGraph(2, {{0, 2}}));
}

TEST_CASE("degree vectors") {
    const DirectedGraph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}});
    CHECK(g.out_degrees() == std::vector<std::uint32_t>{3, 1, 0, 0});
    CHECK(g.in_degrees() == std::vector<std::uint32_t>{1, 1, 1, 1});
}

TEST_CASE("incidence lists keep arc order") {
    const DirectedGraph g = make_graph(3, {{0, 2}, {1, 2}, {0, 1}});
    const auto in = g.in_arcs();
    REQUIRE(in[2].size() == 2);
    CHECK(in[2][0] == std::pair<VertexId, std::size_t>{0, 0});
    CHECK(in[2][1] == std::pair<VertexId, std::size_t>{1, 1});
    const auto out = g.out_arcs();
    REQUIRE(out[0].size() == 2);
    CHECK(out[0][0] == std::pair<VertexId, std::size_t>{2, 0});
    CHECK(out[0][1] == std::pair<VertexId, std::size_t>{1, 2});
}

TEST_CASE("average outdegree is an exact reduced ratio") {
    CHECK(average_outdegree(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})) == Ratio{1, 1});
    CHECK(average_outdegree(make_graph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}})) == Ratio{4, 3});
    CHECK(average_outdegree(make_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}})) ==
          Ratio{2, 1});
    CHECK(average_outdegree(make_graph(4, {{0, 1}, {1, 0}})) == Ratio{1, 2});
}

TEST_CASE("splitting rewires in-arcs of the chosen vertex to a fresh sink") {
    const DirectedGraph two_cycle = make_graph(2, {{0, 1}, {1, 0}});
    const SplitGraph g = split_vertex(two_cycle, 0);
    CHECK(g.base.vertex_count() == 3);
    CHECK(g.s == 0);
    CHECK(g.t == 2);
    CHECK(g.split_source == 0);
    REQUIRE(g.base.arc_count() == 2);
    CHECK(g.base.arcs()[0] == Arc{0, 1});
    CHECK(g.base.arcs()[1] == Arc{1, 2});
}

TEST_CASE("splitting at a nonzero vertex keeps ids in place") {
    const DirectedGraph two_cycle = make_graph(2, {{0, 1}, {1, 0}});
    const SplitGraph g = split_vertex(two_cycle, 1);
    CHECK(g.s == 1);
    CHECK(g.t == 2);
    CHECK(g.base.arcs()[0] == Arc{0, 2});
    CHECK(g.base.arcs()[1] == Arc{1, 0});
}

TEST_CASE("split of the triangle has exactly one source-sink path") {
    const SplitGraph g = split_vertex(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}), 0);
    CHECK(g.base.arcs()[2] == Arc{2, 3});
    CHECK(count_hamiltonian_st_paths(g) == 1);
}

TEST_CASE("split vertex must exist") {
    const DirectedGraph g = make_graph(2, {{0, 1}, {1, 0}});
    CHECK_THROWS(split_vertex(g, 2));
}

TEST_CASE("cycle count is preserved through every split choice") {
    Philox rng(314, 0, Philox::kInstanceGen);
    for (int trial = 0; trial < 40; ++trial) {
        const VertexId n = static_cast<VertexId>(3 + rng.uniform_below(4));
        std::vector<Arc> arcs;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = 0; b < n; ++b)
                if (a != b && rng.uniform_below(100) < 45) arcs.push_back({a, b});
        const DirectedGraph g(n, std::move(arcs));
        const std::uint64_t cycles = count_hamiltonian_cycles(g);
        for (VertexId u = 0; u < n; ++u)
            CHECK(count_hamiltonian_st_paths(split_vertex(g, u)) == cycles);
    }
}
