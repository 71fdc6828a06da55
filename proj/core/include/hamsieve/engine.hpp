#pragma once

#include <cstdint>
#include <vector>

#include "hamsieve/fingerprint.hpp"
#include "hamsieve/graph.hpp"
#include "hamsieve/sieve.hpp"

namespace hamsieve {

struct EngineConfig {
    Params params;
    std::uint64_t master_seed = 0;
    unsigned workers = 1;
    VertexId split_at = 0;  // which vertex becomes the path source
    // Inputs up to this many vertices go straight to the exact oracle;
    // 0 forces the algebraic path everywhere.
    std::uint32_t oracle_fallback_max = 10;
};

enum class Verdict { Yes, No };

struct RepetitionStats {
    std::uint64_t terms_streamed;
    std::uint64_t term_cap;       // abort_factor * expected terms, floored
    double expected_terms;        // per-repetition expectation, for reporting
    bool aborted;                 // terms_streamed exceeded term_cap
    bool nonzero;                 // completed with a nonzero accumulated sum
};

// A "Yes" is always backed by a completed nonzero repetition (or, below the
// fallback bound, by the exact oracle); the algebraic path has no false
// positives, only possible misses.
struct DetectionReport {
    Verdict verdict;
    unsigned repetitions_run;
    std::vector<RepetitionStats> per_rep;
    double wall_ms;
    bool used_oracle_fallback;
};

// Running ring sum of streamed terms.
RingElement accumulate(const RingElement& partial, const RingElement& term);

struct RepetitionOutcome {
    RingElement sum;
    std::uint64_t terms;
    bool aborted;
};

// One full sieve-and-sum pass over a fixed sample point. Streams every
// contributing assignment, adds its signed determinant, and gives up once the
// stream passes term_cap (the sum is then meaningless and discarded by the
// caller). Work is split between workers at branch granularity; the result is
// bit-identical for every worker count, abort included.
RepetitionOutcome run_repetition(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                                 const Params& params, std::uint64_t term_cap, unsigned workers);

DetectionReport decide_hamiltonicity(const DirectedGraph& g, const EngineConfig& cfg);

}  // namespace hamsieve
