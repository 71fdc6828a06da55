#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hamsieve/oracle.hpp"
#include "hamsieve/sieve.hpp"
#include "test_support.hpp"

using namespace hamsieve;
using testsupport::make_graph;

namespace {

// Exact equality of value against integer total / 2^shift.
bool equals_scaled(const DyadicRational& value, const BigInt& total, std::size_t shift) {
    return compare(value, DyadicRational{total, -static_cast<long>(shift)}) == 0;
}

std::size_t branch_count(const SamplePoint& sp, VertexId t, unsigned k) {
    BranchStream bs(sp, t, k);
    SieveBranch b;
    std::size_t count = 0;
    while (bs.next(b)) ++count;
    return count;
}

}  // namespace

TEST_CASE("dyadic rationals") {
    CHECK(DyadicRational{3, -3}.to_double() == doctest::Approx(0.375));
    CHECK(DyadicRational{1, 4}.to_double() == doctest::Approx(16.0));

    DyadicRational r{12, -2};
    r.normalize();
    CHECK(r.mantissa == 3);
    CHECK(r.exponent == 0);
    DyadicRational z{0, -7};
    z.normalize();
    CHECK(z.exponent == 0);

    CHECK(compare(DyadicRational{1, -3}, DyadicRational{2, -4}) == 0);
    CHECK(compare(DyadicRational{1, -3}, DyadicRational{3, -4}) < 0);
    CHECK(compare(DyadicRational{1, 0}, DyadicRational{1, -1}) > 0);

    CHECK(floor_scaled(DyadicRational{5, -4}, 32) == 10);
    CHECK(floor_scaled(DyadicRational{3, -1}, 3) == 4);  // floor(4.5)
    CHECK(floor_scaled(DyadicRational{1, -10}, 1) == 0);
    CHECK(floor_scaled(DyadicRational{1, 80}, 2) == ~std::uint64_t{0});  // saturates
}

TEST_CASE("contribution probability closed form") {
    // Three polynomial-free rows, one coefficient bit: only the all-odd
    // pattern survives, probability 1/8.
    CHECK(compare(contributing_probability(3, 1), DyadicRational{1, -3}) == 0);
    // Four rows, two bits: 1 + 4 patterns out of 16.
    CHECK(compare(contributing_probability(4, 2), DyadicRational{5, -4}) == 0);
    // More bits than rows: everything survives.
    CHECK(compare(contributing_probability(2, 3), DyadicRational{1, 0}) == 0);
    CHECK(compare(contributing_probability(0, 1), DyadicRational{1, 0}) == 0);
}

TEST_CASE("expected stream size closed form") {
    // More coefficient bits than sampled rows: nothing is ever sieved out.
    CHECK(compare(expected_contributing_count(5, 2, false, 3), DyadicRational{32, 0}) == 0);
    CHECK(compare(expected_contributing_count(6, 2, true, 4), DyadicRational{64, 0}) == 0);
    // One sampled vertex, one bit, three activation bits: 6 by hand.
    CHECK(compare(expected_contributing_count(3, 1, false, 1), DyadicRational{6, 0}) == 0);
    CHECK_THROWS(expected_contributing_count(2, 2, true, 1));
}

TEST_CASE("z-set collects zero-fixed vertices and a sampled sink") {
    const SplitGraph g = split_vertex(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}), 0);
    // Sample {1, 3}; arc weights: head 2 unsampled gets one.
    const SamplePoint sp = testsupport::fixed_sample_point(g, {1, 3}, {0, 4, 0});
    CHECK(z_set(sp, g.t, PartialAssignment{{1}, 0b0}) == std::vector<VertexId>{1, 3});
    CHECK(z_set(sp, g.t, PartialAssignment{{1}, 0b1}) == std::vector<VertexId>{3});

    const SamplePoint no_t = testsupport::fixed_sample_point(g, {1, 2}, {0, 0, 7});
    CHECK(z_set(no_t, g.t, PartialAssignment{{1, 2}, 0b01}) == std::vector<VertexId>{2});
    CHECK(z_set(no_t, g.t, PartialAssignment{{1, 2}, 0b11}) == std::vector<VertexId>{});
}

TEST_CASE("equation system of the split two-cycle by hand") {
    const SplitGraph g = split_vertex(make_graph(2, {{0, 1}, {1, 0}}), 0);
    const SamplePoint sp = testsupport::fixed_sample_point(g, {1}, {0, 3});
    const QVector q = testsupport::zero_q(sp);

    // Fix the sampled vertex to zero and ask its diagonal to stay odd: the
    // only in-arc comes from the free vertex 0, so the system reads y0 = 1.
    const Gf2System sys = build_equation_system(g, sp, PartialAssignment{{1}, 0b0},
                                                ParityVector{{1}, 0b1}, q);
    REQUIRE(sys.num_vars == 1);
    REQUIRE(sys.rows.size() == 1);
    CHECK(sys.rows[0].coeffs.get(0));
    CHECK(sys.rows[0].rhs);

    const auto sol = solve(sys);
    REQUIRE(sol.has_value());
    CHECK(sol->particular.to_mask() == 1);
    CHECK(sol->null_basis.empty());

    // The same parity with the perturbation bit set flips the right side.
    const QVector q1 = testsupport::fixed_q(sp, {1});
    CHECK_FALSE(build_equation_system(g, sp, PartialAssignment{{1}, 0b0}, ParityVector{{1}, 0b1}, q1)
                    .rows[0]
                    .rhs);
}

TEST_CASE("branch totals follow the binomial tail") {
    const SplitGraph g = split_vertex(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}), 0);
    const SamplePoint sp = testsupport::fixed_sample_point(g, {1, 2}, {0, 0, 7});
    // Per fixed mask with j zero bits the stream holds one parity pattern per
    // even-row subset of size below coeff_bits.
    CHECK(branch_count(sp, g.t, 1) == 4);  // 1 + 1 + 1 + 1
    CHECK(branch_count(sp, g.t, 2) == 8);  // 3 + 2 + 2 + 1
    CHECK(branch_count(sp, g.t, 3) == 9);  // 4 + 2 + 2 + 1

    const SamplePoint with_t = testsupport::fixed_sample_point(g, {1, 3}, {0, 4, 0});
    CHECK(branch_count(with_t, g.t, 1) == 2);
    CHECK(branch_count(with_t, g.t, 2) == 5);  // 3 + 2
}

TEST_CASE("branches are pairwise distinct") {
    const SplitGraph g = split_vertex(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}), 0);
    const SamplePoint sp = testsupport::fixed_sample_point(g, {1, 3}, {0, 4, 0});
    BranchStream bs(sp, g.t, 2);
    SieveBranch b;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    while (bs.next(b)) {
        CHECK(seen.insert({b.fixed.values, b.parity.values}).second);
        // Parity rows must sit exactly on the z-set of the fixed bits.
        CHECK(b.parity.domain == z_set(sp, g.t, b.fixed));
    }
}

TEST_CASE("stream of the split two-cycle by hand") {
    const SplitGraph g = split_vertex(make_graph(2, {{0, 1}, {1, 0}}), 0);
    const SamplePoint sp = testsupport::fixed_sample_point(g, {1}, {0, 3});
    const QVector q = testsupport::zero_q(sp);

    const auto masks = testsupport::streamed_masks(g, sp, q, 1);
    CHECK(std::set<std::uint64_t>(masks.begin(), masks.end()) ==
          std::set<std::uint64_t>{0b01, 0b10, 0b11});
    // The one sieved-out assignment has an even diagonal and a zero term.
    CHECK(term_value(g, sp, q, testsupport::mask_assignment(2, 0b00), RingParams{1, 8}).is_zero());
    CHECK(count_contributing(g, sp, q, 1) == 3);
    CHECK(count_contributing(g, sp, q, 1, 1) == 2);  // saturates at cap + 1
    CHECK(count_contributing(g, sp, q, 1, 3) == 3);  // cap exactly met
}

TEST_CASE("streamed assignments are exactly the contributing ones") {
    Philox rng(600, 0, Philox::kInstanceGen);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const VertexId n = static_cast<VertexId>(3 + rng.uniform_below(5));
        const DirectedGraph base = testsupport::random_digraph(n, 45, rng);
        const SplitGraph g = split_vertex(base, static_cast<VertexId>(rng.uniform_below(n)));
        const std::size_t tau = 1 + rng.uniform_below(n);
        const unsigned k = 1 + static_cast<unsigned>(rng.uniform_below(3));
        const Params params{tau, k, 3, 3 * n + 1, 1, 1};
        Philox srng(6000 + trial, 0, Philox::kSampleSet);
        const auto [sp, q] = testsupport::random_point(g, params, srng);

        const auto masks = testsupport::streamed_masks(g, sp, q, k);
        const std::set<std::uint64_t> streamed(masks.begin(), masks.end());
        CHECK(streamed.size() == masks.size());  // no duplicates
        CHECK(streamed == testsupport::brute_contributing_set(g, sp, q, k));
        CHECK(count_contributing(g, sp, q, k) == masks.size());
        if (streamed.size() < (std::uint64_t{1} << n)) ++nontrivial;
    }
    // The parameters above must actually sieve something out, most runs.
    CHECK(nontrivial > 60);
}

TEST_CASE("sieved-out terms are zero in the ring") {
    Philox rng(601, 0, Philox::kInstanceGen);
    for (int trial = 0; trial < 40; ++trial) {
        const VertexId n = static_cast<VertexId>(3 + rng.uniform_below(3));
        const DirectedGraph base = testsupport::random_digraph(n, 50, rng);
        const SplitGraph g = split_vertex(base, 0);
        const std::size_t tau = 1 + rng.uniform_below(n);
        const unsigned k = 1 + static_cast<unsigned>(rng.uniform_below(2));
        const Params params{tau, k, 3, 3 * n + 1, 1, 1};
        Philox srng(6100 + trial, 0, Philox::kSampleSet);
        const auto [sp, q] = testsupport::random_point(g, params, srng);

        const auto masks = testsupport::streamed_masks(g, sp, q, k);
        const std::set<std::uint64_t> streamed(masks.begin(), masks.end());
        const RingParams rp = params.ring();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            if (streamed.count(bits)) continue;
            CHECK(term_value(g, sp, q, testsupport::mask_assignment(n, bits), rp).is_zero());
        }
    }
}

TEST_CASE("summing the stream reproduces the full inclusion-exclusion") {
    Philox rng(602, 0, Philox::kInstanceGen);
    int nonzero = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const VertexId n = static_cast<VertexId>(3 + rng.uniform_below(4));
        const DirectedGraph base = testsupport::random_digraph(n, 50, rng);
        const SplitGraph g = split_vertex(base, static_cast<VertexId>(rng.uniform_below(n)));
        const std::size_t tau = 1 + rng.uniform_below(n);
        const unsigned k = 1 + static_cast<unsigned>(rng.uniform_below(2));
        const Params params{tau, k, 4, 4 * n + 1, 1, 1};
        Philox srng(6200 + trial, 0, Philox::kSampleSet);
        const auto [sp, q] = testsupport::random_point(g, params, srng);
        const RingParams rp = params.ring();

        TermStream stream(g, sp, q, k);
        TermEvaluator eval(g, sp, q, rp);
        RingElement sum = RingElement::zero(rp);
        Assignment y;
        while (stream.next(y)) sum += eval.value(y);

        CHECK(sum == evaluate_p_fullsum(g, sp, q, rp));
        CHECK(sum == evaluate_p_direct(g, sp, rp));
        if (!sum.is_zero()) ++nonzero;
    }
    CHECK(nonzero > 5);
}

TEST_CASE("expected stream size matches the average over all perturbations") {
    Philox rng(603, 0, Philox::kInstanceGen);
    for (int trial = 0; trial < 30; ++trial) {
        const VertexId n = static_cast<VertexId>(3 + rng.uniform_below(4));
        const DirectedGraph base = testsupport::random_digraph(n, 50, rng);
        const SplitGraph g = split_vertex(base, 0);
        const std::size_t tau = 1 + rng.uniform_below(std::min<std::uint64_t>(n, 4));
        const unsigned k = 1 + static_cast<unsigned>(rng.uniform_below(3));
        const Params params{tau, k, 3, 3 * n + 1, 1, 1};
        Philox srng(6300 + trial, 0, Philox::kSampleSet);
        const SamplePoint sp = sample_point(g, params, srng);

        BigInt total = 0;
        for (std::uint64_t qbits = 0; qbits < (std::uint64_t{1} << tau); ++qbits) {
            std::vector<std::uint8_t> bits(tau);
            for (std::size_t i = 0; i < tau; ++i) bits[i] = (qbits >> i) & 1u;
            const QVector q = testsupport::fixed_q(sp, std::move(bits));
            total += count_contributing(g, sp, q, k);
        }

        const bool t_in = sp.contains(g.t);
        const std::size_t rest = sp.sampled.size() - (t_in ? 1 : 0);
        const DyadicRational expect = expected_contributing_count(n, rest, t_in, k);
        CHECK(equals_scaled(expect, total, tau));
    }
}
