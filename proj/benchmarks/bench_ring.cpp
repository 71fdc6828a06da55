#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "hamsieve/random.hpp"
#include "hamsieve/ring.hpp"

using namespace hamsieve;

namespace {

RingElement dense_element(RingParams p, Philox& rng) {
    std::vector<std::uint64_t> coeffs(p.trunc_len);
    for (auto& c : coeffs) c = rng.next() | 1u;
    return RingElement::from_coeffs(p, std::move(coeffs));
}

// Sum of nz random monomials: the shape Laplacian entries actually have,
// where trunc_len is huge but almost every coefficient is zero.
RingElement sparse_element(RingParams p, std::size_t nz, Philox& rng) {
    RingElement e = RingElement::zero(p);
    for (std::size_t i = 0; i < nz; ++i)
        e += RingElement::monomial(p, rng.uniform_below(p.trunc_len), rng.next() | 1u);
    return e;
}

}  // namespace

static void BM_RingMulDense(benchmark::State& state) {
    const RingParams p{8, static_cast<std::size_t>(state.range(0))};
    Philox rng(1, 0, Philox::kGeneric);
    const RingElement a = dense_element(p, rng);
    const RingElement b = dense_element(p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMulDense)->Arg(64)->Arg(256)->Arg(1024);

static void BM_RingMulSparse(benchmark::State& state) {
    const RingParams p{8, 10001};
    Philox rng(2, 0, Philox::kGeneric);
    const auto nz = static_cast<std::size_t>(state.range(0));
    const RingElement a = sparse_element(p, nz, rng);
    const RingElement b = sparse_element(p, nz, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMulSparse)->Arg(2)->Arg(8)->Arg(32);

static void BM_RingAdd(benchmark::State& state) {
    const RingParams p{8, 1024};
    Philox rng(3, 0, Philox::kGeneric);
    const RingElement a = dense_element(p, rng);
    const RingElement b = dense_element(p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RingAdd);

BENCHMARK_MAIN();
