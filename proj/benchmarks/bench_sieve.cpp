#include <benchmark/benchmark.h>

#include <cstdint>

#include "hamsieve/engine.hpp"
#include "hamsieve/fingerprint.hpp"
#include "hamsieve/generate.hpp"
#include "hamsieve/graph.hpp"
#include "hamsieve/random.hpp"
#include "hamsieve/sieve.hpp"

using namespace hamsieve;

// One full sieve-and-sum repetition on a planted instance, uncapped. This is
// the unit the detection engine repeats, so per-iteration time here divided
// into a time budget gives the affordable repetition count directly.
static void BM_Repetition(benchmark::State& state) {
    const auto n = static_cast<VertexId>(state.range(0));
    Philox gen(30, 0, Philox::kInstanceGen);
    const DirectedGraph base = generate_random_digraph(n, 2.0, true, gen);
    const SplitGraph g = split_vertex(base, 0);
    const Params params{3, 1, 6, static_cast<std::size_t>(n) * 6 + 1, 1, 1};
    Philox srng(31, 0, Philox::kSampleSet);
    const SamplePoint sp = sample_point(g, params, srng);
    const QVector q = sample_q(sp, srng);
    for (auto _ : state) {
        const RepetitionOutcome out = run_repetition(g, sp, q, params, ~std::uint64_t{0}, 1);
        benchmark::DoNotOptimize(out.terms);
    }
}
BENCHMARK(BM_Repetition)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

// Branch bookkeeping alone: counting the stream without evaluating any term
// isolates the linear-algebra overhead from the determinant cost.
static void BM_CountContributing(benchmark::State& state) {
    Philox gen(32, 0, Philox::kInstanceGen);
    const DirectedGraph base = generate_random_digraph(24, 1.5, true, gen);
    const SplitGraph g = split_vertex(base, 0);
    const Params params{8, 1, 4, 24 * 4 + 1, 1, 1};
    Philox srng(33, 0, Philox::kSampleSet);
    const SamplePoint sp = sample_point(g, params, srng);
    const QVector q = sample_q(sp, srng);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_contributing(g, sp, q, params.coeff_bits));
}
BENCHMARK(BM_CountContributing);

static void BM_SamplePoint(benchmark::State& state) {
    Philox gen(34, 0, Philox::kInstanceGen);
    const DirectedGraph base = generate_random_digraph(16, 2.0, true, gen);
    const SplitGraph g = split_vertex(base, 0);
    const Params params{4, 1, 100, 1601, 1, 1};
    std::uint64_t stream = 0;
    for (auto _ : state) {
        Philox rng(35, stream++, Philox::kSampleSet);
        const SamplePoint sp = sample_point(g, params, rng);
        benchmark::DoNotOptimize(sp.sampled.size());
    }
}
BENCHMARK(BM_SamplePoint);
