#include <benchmark/benchmark.h>

#include <cstdint>

#include "hamsieve/gf2.hpp"
#include "hamsieve/random.hpp"

using namespace hamsieve;

namespace {

Gf2System random_system(std::size_t vars, std::size_t rows, Philox& rng) {
    Gf2System sys{vars, {}};
    for (std::size_t r = 0; r < rows; ++r) {
        BitVec coeffs(vars);
        for (std::size_t i = 0; i < vars; ++i) coeffs.set(i, rng.coin());
        sys.rows.push_back(Gf2Row{std::move(coeffs), rng.coin()});
    }
    return sys;
}

}  // namespace

static void BM_Gf2Solve(benchmark::State& state) {
    Philox rng(20, 0, Philox::kGeneric);
    const auto vars = static_cast<std::size_t>(state.range(0));
    const Gf2System sys = random_system(vars, vars, rng);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
}
BENCHMARK(BM_Gf2Solve)->Arg(32)->Arg(128)->Arg(512);

// Walks all solutions of a system with nullity 16; the Gray-code stream is
// what the sieve spends its inner loop on.
static void BM_Gf2Stream(benchmark::State& state) {
    Philox rng(21, 0, Philox::kGeneric);
    const std::size_t vars = 48;
    Gf2System sys = random_system(vars, vars - 16, rng);
    auto sol = solve(sys);
    while (!sol.has_value() || sol->null_basis.size() != 16) {
        sys = random_system(vars, vars - 16, rng);
        sol = solve(sys);
    }
    for (auto _ : state) {
        SolutionStream stream(*sol);
        BitVec v;
        std::uint64_t walked = 0;
        while (stream.next(v)) ++walked;
        benchmark::DoNotOptimize(walked);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << 16));
}
BENCHMARK(BM_Gf2Stream);
