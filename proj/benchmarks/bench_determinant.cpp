#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "hamsieve/determinant.hpp"
#include "hamsieve/random.hpp"
#include "hamsieve/ring.hpp"

using namespace hamsieve;

namespace {

RingElement short_element(RingParams p, Philox& rng) {
    std::vector<std::uint64_t> coeffs(p.trunc_len);
    for (auto& c : coeffs) c = rng.next();
    coeffs[0] |= 1u;
    return RingElement::from_coeffs(p, std::move(coeffs));
}

RingMatrix dense_matrix(std::size_t dim, RingParams p, Philox& rng) {
    RingMatrix m(dim, p);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = short_element(p, rng);
    return m;
}

}  // namespace

static void BM_DetDense(benchmark::State& state) {
    const RingParams p{8, 32};
    Philox rng(10, 0, Philox::kGeneric);
    const auto dim = static_cast<std::size_t>(state.range(0));
    const RingMatrix m = dense_matrix(dim, p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetDense)->Arg(4)->Arg(8)->Arg(12);

// Half the rows carry only their diagonal entry, the common shape under
// low-activation assignments; these rows peel off as scalar factors before
// the cubic elimination starts.
static void BM_DetDiagonalPeel(benchmark::State& state) {
    const RingParams p{8, 32};
    Philox rng(11, 0, Philox::kGeneric);
    const auto dim = static_cast<std::size_t>(state.range(0));
    RingMatrix m = dense_matrix(dim, p, rng);
    for (std::size_t i = 0; i < dim; i += 2)
        for (std::size_t j = 0; j < dim; ++j)
            if (j != i) m.at(i, j) = RingElement::zero(p);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetDiagonalPeel)->Arg(8)->Arg(12);
