#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hamsieve/generate.hpp"
#include "hamsieve/oracle.hpp"
#include "test_support.hpp"

using namespace hamsieve;

TEST_CASE("arc budget and simplicity") {
    Philox rng(1, 0, Philox::kInstanceGen);
    for (int trial = 0; trial < 30; ++trial) {
        const VertexId n = static_cast<VertexId>(4 + rng.uniform_below(8));
        const double delta = 1.0 + 0.25 * static_cast<double>(rng.uniform_below(8));
        const DirectedGraph g = generate_random_digraph(n, delta, false, rng);
        CHECK(g.vertex_count() == n);
        CHECK(g.arc_count() ==
              static_cast<std::size_t>(std::llround(delta * static_cast<double>(n))));
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const Arc& a : g.arcs()) {
            CHECK(a.tail < n);
            CHECK(a.head < n);
            CHECK(a.tail != a.head);
            CHECK(seen.insert({a.tail, a.head}).second);
        }
    }
}

TEST_CASE("the planted cycle makes the instance Hamiltonian") {
    Philox rng(2, 0, Philox::kInstanceGen);
    for (int trial = 0; trial < 15; ++trial) {
        const VertexId n = static_cast<VertexId>(5 + rng.uniform_below(5));
        const DirectedGraph g = generate_random_digraph(n, 1.8, true, rng);
        CHECK(is_hamiltonian_bruteforce(g));
    }
}

TEST_CASE("dense targets fill the whole arc universe") {
    Philox rng(3, 0, Philox::kInstanceGen);
    // round(4.99 * 6) = 30 = 6 * 5: the complete simple digraph.
    const DirectedGraph g = generate_random_digraph(6, 4.99, true, rng);
    CHECK(g.arc_count() == 30);
    CHECK(is_hamiltonian_bruteforce(g));
}

TEST_CASE("invalid requests are rejected") {
    Philox rng(4, 0, Philox::kInstanceGen);
    CHECK_THROWS(generate_random_digraph(1, 1.0, false, rng));
    CHECK_THROWS(generate_random_digraph(6, 0.0, false, rng));
    CHECK_THROWS(generate_random_digraph(6, -1.0, false, rng));
    CHECK_THROWS(generate_random_digraph(4, 3.3, false, rng));    // 13 > 12 arcs
    CHECK_THROWS(generate_random_digraph(6, 0.5, true, rng));     // cycle needs 6
    CHECK_NOTHROW(generate_random_digraph(4, 3.0, false, rng));   // exactly full
}

TEST_CASE("generation replays from the stream address") {
    Philox a(77, 3, Philox::kInstanceGen);
    Philox b(77, 3, Philox::kInstanceGen);
    const DirectedGraph ga = generate_random_digraph(9, 2.0, true, a);
    const DirectedGraph gb = generate_random_digraph(9, 2.0, true, b);
    CHECK(ga.arcs() == gb.arcs());

    Philox c(78, 3, Philox::kInstanceGen);
    const DirectedGraph gc = generate_random_digraph(9, 2.0, true, c);
    CHECK(ga.arcs() != gc.arcs());
}
