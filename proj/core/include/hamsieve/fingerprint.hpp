#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamsieve/determinant.hpp"
#include "hamsieve/gf2.hpp"
#include "hamsieve/graph.hpp"
#include "hamsieve/random.hpp"
#include "hamsieve/ring.hpp"

namespace hamsieve {

// Everything one detection run needs beyond the graph itself.
struct Params {
    std::size_t sample_size;   // vertices drawn into the perturbed set per repetition
    unsigned coeff_bits;       // ring modulus exponent; also the sieve cutoff
    std::uint64_t max_weight;  // arc weights are uniform in [1, max_weight]
    std::size_t trunc_len;     // ring truncation, > n * max_weight keeps all path weights
    unsigned repetitions;
    std::uint64_t abort_factor;  // a repetition aborts past abort_factor * expected terms

    RingParams ring() const { return {coeff_bits, trunc_len}; }
    void validate(std::size_t n) const;
};

struct ParamOverrides {
    std::optional<std::size_t> sample_size;
    std::optional<unsigned> coeff_bits;
    std::optional<std::uint64_t> max_weight;
    std::optional<std::size_t> trunc_len;
    std::optional<unsigned> repetitions;
    std::optional<std::uint64_t> abort_factor;
};

// Defaults per split graph of an n-vertex input with arc density d = |A|/n:
//   sample_size  ceil(n / (20 d)), clamped to [1, n]
//   coeff_bits   ceil(sample_size / 10), at least 1
//   max_weight   100 |A|
//   trunc_len    n * max_weight + 1
//   repetitions  ceil(100 ln n), at least 1
//   abort_factor n
// Any field can be pinned by an override; trunc_len tracks an overridden
// max_weight unless itself overridden.
Params derive_params(const SplitGraph& g, const ParamOverrides& overrides = {});

// One Monte Carlo evaluation point: a random vertex subset and random arc
// weights. Arcs whose head lies in the subset carry ring value 1 and no
// weight; every other arc carries the monomial x^weight.
struct SamplePoint {
    std::vector<VertexId> sampled;    // ascending, subset of V minus s
    std::vector<std::uint8_t> in_sample;  // size |V| membership flags
    std::vector<std::uint64_t> arc_weight;  // per arc index; 0 for unweighted arcs

    bool contains(VertexId v) const { return in_sample[v] != 0; }
};

SamplePoint sample_point(const SplitGraph& g, const Params& params, Philox& rng);

// Ring value of one arc at this sample point.
RingElement arc_value(const SamplePoint& sp, std::size_t arc_index, RingParams p);

// The 0/1 diagonal perturbation, defined exactly on the sampled set.
struct QVector {
    std::vector<VertexId> domain;  // ascending, equals SamplePoint::sampled
    std::vector<std::uint8_t> bits;

    int bit_of(VertexId v) const;  // 0 or 1; v must be in the domain
};

QVector sample_q(const SamplePoint& sp, Philox& rng);

// Vertex activation: one bit per vertex of the split graph except t. With
// t = n, the assignment is simply indexed by original vertex id, s included.
using Assignment = BitVec;

// The weighted Laplacian of the split graph with row and column s deleted,
// evaluated at (z, y) and with q subtracted on the sampled diagonal:
//   diagonal (v,v):  sum of z_wv * y_w over arcs w->v, minus q_v if sampled
//   entry (u,v):     -z_uv * y_u for each arc u->v
// Rows and columns are ordered by vertex id with s skipped; t has no
// activation bit and never contributes off-diagonal entries.
RingMatrix build_perturbed_laplacian(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                                     const Assignment& y, RingParams p);

// Signed summand of the inclusion-exclusion: with N activation bits,
// (-1)^(N - |y|) * det of the matrix above. Computed without materializing
// the full matrix: rows of zero-assigned vertices are diagonal-only, so they
// split off as scalar factors before the determinant proper.
RingElement term_value(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                       const Assignment& y, RingParams p);

// Per-repetition context for term_value; builds adjacency once and reuses it
// across the up-to-exponentially-many assignments of one repetition.
class TermEvaluator {
public:
    TermEvaluator(const SplitGraph& g, const SamplePoint& sp, const QVector& q, RingParams p);

    RingElement value(const Assignment& y) const;
    std::size_t num_vars() const { return num_vars_; }

private:
    struct InArc {
        VertexId tail;
        std::uint64_t weight;  // 0 means ring value 1
    };

    RingParams params_;
    std::size_t num_vars_;  // = n; assignment length
    VertexId s_, t_;
    std::vector<std::vector<InArc>> in_arcs_;    // per head vertex
    std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> out_arcs_;  // per tail
    std::vector<std::int8_t> q_of_;  // -1 for unsampled vertices
};

}  // namespace hamsieve
