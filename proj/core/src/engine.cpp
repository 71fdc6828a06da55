#include "hamsieve/engine.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "hamsieve/oracle.hpp"

namespace hamsieve {

RingElement accumulate(const RingElement& partial, const RingElement& term) {
    return partial + term;
}

namespace {

// Pulls branches under a lock; workers then grind their branch privately.
class SharedBranches {
public:
    SharedBranches(const SamplePoint& sp, VertexId t, unsigned coeff_bits)
        : stream_(sp, t, coeff_bits) {}

    bool next(SieveBranch& out) {
        std::lock_guard<std::mutex> lock(mu_);
        return stream_.next(out);
    }

private:
    std::mutex mu_;
    BranchStream stream_;
};

struct WorkerShared {
    SharedBranches branches;
    std::atomic<std::uint64_t> streamed{0};
    std::atomic<bool> aborted{false};
    std::uint64_t term_cap;
};

// Processes branches until the stream (or the term budget) runs out. Counting
// is saturated: once the shared counter passes term_cap every worker stops,
// and the repetition reports exactly term_cap + 1 regardless of scheduling.
void worker_loop(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                 const Params& params, WorkerShared& shared, RingElement& out_sum) {
    const TermEvaluator eval(g, sp, q, params.ring());
    std::vector<VertexId> free_vertices;
    for (VertexId v = 0; v < static_cast<VertexId>(eval.num_vars()); ++v)
        if (!sp.contains(v)) free_vertices.push_back(v);

    RingElement sum = RingElement::zero(params.ring());
    SieveBranch branch;
    BitVec solution;
    while (!shared.aborted.load(std::memory_order_relaxed) && shared.branches.next(branch)) {
        const Gf2System sys = build_equation_system(g, sp, branch.fixed, branch.parity, q);
        auto sol = solve(sys);
        if (!sol) continue;
        SolutionStream solutions(std::move(*sol));
        while (solutions.next(solution)) {
            const std::uint64_t count =
                shared.streamed.fetch_add(1, std::memory_order_relaxed) + 1;
            if (count > shared.term_cap) {
                shared.aborted.store(true, std::memory_order_relaxed);
                break;
            }
            const Assignment y =
                assemble_assignment(eval.num_vars(), branch.fixed, free_vertices, solution);
            sum = accumulate(sum, eval.value(y));
        }
        if (shared.aborted.load(std::memory_order_relaxed)) break;
    }
    out_sum = std::move(sum);
}

}  // namespace

RepetitionOutcome run_repetition(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                                 const Params& params, std::uint64_t term_cap, unsigned workers) {
    if (workers < 1) workers = 1;
    WorkerShared shared{{sp, g.t, params.coeff_bits}, {}, {}, term_cap};

    std::vector<RingElement> sums(workers, RingElement::zero(params.ring()));
    if (workers == 1) {
        worker_loop(g, sp, q, params, shared, sums[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { worker_loop(g, sp, q, params, shared, sums[w]); });
        for (std::thread& th : pool) th.join();
    }

    RepetitionOutcome out{RingElement::zero(params.ring()), 0, false};
    if (shared.aborted.load()) {
        // The counter may have raced a little past the cap; the canonical
        // abort report is cap + 1, which every schedule agrees on.
        out.terms = term_cap + 1;
        out.aborted = true;
        return out;
    }
    out.terms = shared.streamed.load();
    for (RingElement& s : sums) out.sum += s;
    return out;
}

namespace {

DetectionReport report_no_reps(Verdict v, bool fallback, double wall_ms) {
    return DetectionReport{v, 0, {}, wall_ms, fallback};
}

}  // namespace

DetectionReport decide_hamiltonicity(const DirectedGraph& g, const EngineConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    // A Hamiltonian cycle needs every vertex to reach and be reached, so
    // degenerate instances answer immediately. This also guarantees the
    // algebraic path below only sees graphs where every row of the punctured
    // Laplacian can go odd, which the sieve's completeness leans on.
    if (g.vertex_count() < 2) return report_no_reps(Verdict::No, false, elapsed_ms());
    {
        const auto in_deg = g.in_degrees();
        const auto out_deg = g.out_degrees();
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (in_deg[v] == 0 || out_deg[v] == 0)
                return report_no_reps(Verdict::No, false, elapsed_ms());
    }

    if (g.vertex_count() <= cfg.oracle_fallback_max) {
        const bool yes = is_hamiltonian_bruteforce(g);
        return report_no_reps(yes ? Verdict::Yes : Verdict::No, true, elapsed_ms());
    }

    const SplitGraph split = split_vertex(g, cfg.split_at);
    const std::size_t n = g.vertex_count();
    cfg.params.validate(n);

    DetectionReport report{Verdict::No, 0, {}, 0.0, false};
    for (unsigned rep = 0; rep < cfg.params.repetitions; ++rep) {
        Philox rng_point(cfg.master_seed, rep, Philox::kSampleSet);
        Philox rng_q(cfg.master_seed, rep, Philox::kPerturbation);

        const SamplePoint sp = sample_point(split, cfg.params, rng_point);
        const QVector q = sample_q(sp, rng_q);

        std::size_t sample_rest = sp.sampled.size();
        const bool t_sampled = sp.contains(split.t);
        if (t_sampled) --sample_rest;
        const DyadicRational expected =
            expected_contributing_count(n, sample_rest, t_sampled, cfg.params.coeff_bits);
        const std::uint64_t cap = floor_scaled(expected, cfg.params.abort_factor);

        const RepetitionOutcome outcome =
            run_repetition(split, sp, q, cfg.params, cap, cfg.workers);

        const bool nonzero = !outcome.aborted && !outcome.sum.is_zero();
        report.per_rep.push_back(
            {outcome.terms, cap, expected.to_double(), outcome.aborted, nonzero});
        report.repetitions_run = rep + 1;
        if (nonzero) {
            report.verdict = Verdict::Yes;
            break;  // the sum is exact per repetition; one witness settles it
        }
    }
    report.wall_ms = elapsed_ms();
    return report;
}

}  // namespace hamsieve
