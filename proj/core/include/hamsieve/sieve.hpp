#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "hamsieve/fingerprint.hpp"
#include "hamsieve/gf2.hpp"
#include "hamsieve/graph.hpp"

namespace hamsieve {

using BigInt = boost::multiprecision::cpp_int;

// Exact mantissa * 2^exponent rational; the contribution probabilities all
// have power-of-two denominators, so this stays closed under the arithmetic
// the engine needs and never rounds.
struct DyadicRational {
    BigInt mantissa;  // non-negative
    long exponent;

    double to_double() const;
    void normalize();  // strip factors of two from the mantissa when exponent < 0
};

// -1, 0, 1 ordering of a against b.
int compare(const DyadicRational& a, const DyadicRational& b);
// floor(factor * value), saturated to the uint64 range.
std::uint64_t floor_scaled(const DyadicRational& value, std::uint64_t factor);

// Values on the sampled set minus t, ascending domain, packed bits.
struct PartialAssignment {
    std::vector<VertexId> domain;
    std::uint64_t values;

    bool value_of(VertexId v) const;
};

// The rows whose diagonal carries no polynomial part: zero-assigned sampled
// vertices, plus t whenever t was sampled.
std::vector<VertexId> z_set(const SamplePoint& sp, VertexId t, const PartialAssignment& fixed);

// Required diagonal parities on the z-set; bit 1 means odd.
struct ParityVector {
    std::vector<VertexId> domain;
    std::uint64_t values;

    bool value_of(VertexId v) const;
};

// Linear system over the unsampled activation bits forcing, for each vertex v
// in the z-set, the diagonal parity p_v:
//   sum of y_w over unsampled in-neighbors w of v
//     = p_v + q_v + sum of fixed y_w over sampled in-neighbors   (mod 2)
// Variables are the unsampled vertices of V minus t in ascending order.
Gf2System build_equation_system(const SplitGraph& g, const SamplePoint& sp,
                                const PartialAssignment& fixed, const ParityVector& parity,
                                const QVector& q);

// One sieve branch: fixed bits on the sample plus a parity pattern with
// fewer than coeff_bits even rows.
struct SieveBranch {
    PartialAssignment fixed;
    ParityVector parity;
};

// All (fixed, parity) branches, lazily: fixed masks ascending, then parity
// patterns by increasing number of even rows, positions lexicographic.
class BranchStream {
public:
    BranchStream(const SamplePoint& sp, VertexId t, unsigned coeff_bits);
    bool next(SieveBranch& out);

private:
    void reset_parity();
    void advance_parity();

    std::vector<VertexId> fixed_domain_;  // sample minus t
    VertexId t_;
    bool t_sampled_ = false;
    unsigned coeff_bits_;
    std::uint64_t fixed_mask_ = 0;
    bool fixed_done_ = false;
    // Parity enumeration state for the current fixed mask.
    std::vector<VertexId> zset_;
    std::size_t even_count_ = 0;
    std::vector<std::size_t> even_positions_;
    bool parity_done_ = false;
};

// Streams every activation assignment whose diagonal can carry fewer than
// coeff_bits even rows on the z-set: exactly the assignments whose term can
// survive in the ring. Memory stays polynomial; the walk is branch by branch
// with a Gray-code walk inside each feasible branch.
class TermStream {
public:
    TermStream(const SplitGraph& g, const SamplePoint& sp, const QVector& q, unsigned coeff_bits);
    bool next(Assignment& out);

private:
    bool open_next_branch();

    const SplitGraph& g_;
    const SamplePoint& sp_;
    const QVector& q_;
    BranchStream branches_;
    std::vector<VertexId> free_vertices_;
    std::size_t num_vars_;
    SieveBranch branch_;
    std::optional<SolutionStream> solutions_;
    BitVec solution_;
};

// Builds the assignment a branch solution denotes.
Assignment assemble_assignment(std::size_t num_vars, const PartialAssignment& fixed,
                               const std::vector<VertexId>& free_vertices, const BitVec& solution);

// Number of assignments TermStream would yield, summed branch-wise from the
// solution-space dimensions; saturates at cap + 1 once past cap.
std::uint64_t count_contributing(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                                 unsigned coeff_bits, std::uint64_t cap = ~std::uint64_t{0});

// Probability over the diagonal perturbation that a fixed assignment with
// z_size polynomial-free rows keeps fewer than coeff_bits of them even:
// (1/2)^z_size * sum over i < coeff_bits of C(z_size, i).
DyadicRational contributing_probability(std::size_t z_size, unsigned coeff_bits);

// Expected number of streamed assignments for one repetition, exactly:
//   sum over fixed bit counts j of
//     2^(num_vars - sample_rest) * C(sample_rest, j) * contributing_probability(j + b)
// with sample_rest = |sample minus t| and b = 1 when t was sampled.
DyadicRational expected_contributing_count(std::size_t num_vars, std::size_t sample_rest,
                                           bool t_sampled, unsigned coeff_bits);

}  // namespace hamsieve
