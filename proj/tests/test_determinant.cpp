#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamsieve/determinant.hpp"
#include "hamsieve/random.hpp"
#include "test_support.hpp"

using namespace hamsieve;

namespace {

RingElement constant(RingParams p, std::uint64_t c) { return RingElement::monomial(p, 0, c); }

}  // namespace

TEST_CASE("dimension one is the entry itself") {
    const RingParams p{8, 3};
    RingMatrix m(1, p);
    m.at(0, 0) = RingElement::from_coeffs(p, {7, 0, 3});
    CHECK(det(m) == m.at(0, 0));
    CHECK(det_reference(m) == m.at(0, 0));
}

TEST_CASE("two by two cofactor formula") {
    const RingParams p{8, 1};
    RingMatrix m(2, p);
    m.at(0, 0) = constant(p, 1);
    m.at(0, 1) = constant(p, 2);
    m.at(1, 0) = constant(p, 3);
    m.at(1, 1) = constant(p, 4);
    // 1*4 - 2*3 = -2, which is 254 modulo 256.
    CHECK(det(m).coeff(0) == 254);
    CHECK(det_reference(m).coeff(0) == 254);
}

TEST_CASE("identity has determinant one") {
    const RingParams p{4, 2};
    for (std::size_t dim : {1u, 2u, 3u, 4u, 5u}) {
        CHECK(det(RingMatrix::identity(dim, p)) == RingElement::one(p));
    }
}

TEST_CASE("repeated rows kill the determinant") {
    const RingParams p{8, 2};
    RingMatrix m(2, p);
    m.at(0, 0) = m.at(1, 0) = constant(p, 1);
    m.at(0, 1) = m.at(1, 1) = constant(p, 1);
    CHECK(det(m).is_zero());

    Philox rng(17, 0, Philox::kGeneric);
    for (int trial = 0; trial < 20; ++trial) {
        RingMatrix r = testsupport::random_matrix(4, p, rng);
        for (std::size_t j = 0; j < 4; ++j) r.at(2, j) = r.at(0, j);
        CHECK(det(r).is_zero());
    }
}

TEST_CASE("triangular determinant is the diagonal product") {
    const RingParams p{16, 3};
    Philox rng(18, 0, Philox::kGeneric);
    for (int trial = 0; trial < 20; ++trial) {
        RingMatrix m(5, p);
        RingElement prod = RingElement::one(p);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = i; j < 5; ++j) m.at(i, j) = testsupport::random_element(p, rng);
            prod = prod * m.at(i, i);
        }
        CHECK(det(m) == prod);
    }
}

TEST_CASE("permutation matrices carry the permutation sign") {
    const RingParams p{8, 1};
    // Cyclic shift on three elements: even permutation.
    RingMatrix cyc(3, p);
    cyc.at(0, 1) = cyc.at(1, 2) = cyc.at(2, 0) = constant(p, 1);
    CHECK(det(cyc) == RingElement::one(p));
    // A transposition: odd.
    RingMatrix swp(3, p);
    swp.at(0, 1) = swp.at(1, 0) = swp.at(2, 2) = constant(p, 1);
    CHECK(det(swp).coeff(0) == 255);
}

TEST_CASE("swapping rows negates") {
    const RingParams p{32, 3};
    Philox rng(19, 0, Philox::kGeneric);
    for (int trial = 0; trial < 20; ++trial) {
        RingMatrix m = testsupport::random_matrix(4, p, rng);
        RingMatrix swapped = m;
        for (std::size_t j = 0; j < 4; ++j) std::swap(swapped.at(1, j), swapped.at(3, j));
        CHECK(det(swapped) == -det(m));
    }
}

TEST_CASE("polynomial entries") {
    const RingParams p{4, 3};
    RingMatrix m(2, p);
    m.at(0, 0) = RingElement::monomial(p, 1, 1);
    m.at(0, 1) = RingElement::one(p);
    m.at(1, 0) = RingElement::one(p);
    m.at(1, 1) = RingElement::monomial(p, 1, 1);
    // x^2 - 1
    const RingElement d = det(m);
    CHECK(d.coeff(0) == 15);
    CHECK(d.coeff(1) == 0);
    CHECK(d.coeff(2) == 1);
}

TEST_CASE("fast path matches the permanent-style expansion") {
    Philox rng(20, 0, Philox::kGeneric);
    for (int trial = 0; trial < 500; ++trial) {
        const RingParams p{1 + static_cast<unsigned>(rng.uniform_below(4)),
                           1 + rng.uniform_below(6)};
        const std::size_t dim = 1 + rng.uniform_below(6);
        const RingMatrix m = testsupport::random_matrix(dim, p, rng);
        CHECK(det(m) == det_reference(m));
    }
}

TEST_CASE("diagonal-only rows are peeled off correctly") {
    Philox rng(21, 0, Philox::kGeneric);
    for (int trial = 0; trial < 100; ++trial) {
        const RingParams p{1 + static_cast<unsigned>(rng.uniform_below(4)), 1 + rng.uniform_below(4)};
        const std::size_t dim = 2 + rng.uniform_below(5);
        RingMatrix m = testsupport::random_matrix(dim, p, rng);
        // Strip a random subset of rows down to their diagonal, the shape the
        // punctured Laplacian takes on inactive vertices.
        for (std::size_t i = 0; i < dim; ++i) {
            if (rng.uniform_below(100) < 50) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (j != i) m.at(i, j) = RingElement::zero(p);
        }
        CHECK(det(m) == det_reference(m));
    }
}

TEST_CASE("a zero diagonal on a diagonal-only row zeroes everything") {
    const RingParams p{8, 2};
    Philox rng(22, 0, Philox::kGeneric);
    RingMatrix m = testsupport::random_matrix(5, p, rng);
    for (std::size_t j = 0; j < 5; ++j) m.at(2, j) = RingElement::zero(p);
    CHECK(det(m).is_zero());
    CHECK(det_reference(m).is_zero());
}

TEST_CASE("reference oracle rejects oversized input") {
    const RingParams p{2, 1};
    CHECK_THROWS(det_reference(RingMatrix(9, p)));
}
