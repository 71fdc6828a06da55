#include "hamsieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hamsieve {

double DyadicRational::to_double() const {
    // ldexp keeps this exact whenever the value fits a double at all.
    return std::ldexp(mantissa.convert_to<double>(), static_cast<int>(exponent));
}

void DyadicRational::normalize() {
    if (mantissa == 0) {
        exponent = 0;
        return;
    }
    while (exponent < 0 && (mantissa & 1) == 0) {
        mantissa >>= 1;
        ++exponent;
    }
}

int compare(const DyadicRational& a, const DyadicRational& b) {
    BigInt lhs = a.mantissa;
    BigInt rhs = b.mantissa;
    if (a.exponent >= b.exponent) lhs <<= a.exponent - b.exponent;
    else rhs <<= b.exponent - a.exponent;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::uint64_t floor_scaled(const DyadicRational& value, std::uint64_t factor) {
    BigInt x = value.mantissa * factor;
    if (value.exponent >= 0) x <<= value.exponent;
    else x >>= -value.exponent;
    if (x > (std::numeric_limits<std::uint64_t>::max)()) return (std::numeric_limits<std::uint64_t>::max)();
    return x.convert_to<std::uint64_t>();
}

bool PartialAssignment::value_of(VertexId v) const {
    const auto it = std::lower_bound(domain.begin(), domain.end(), v);
    if (it == domain.end() || *it != v)
        throw std::invalid_argument("PartialAssignment: vertex not in domain");
    return (values >> (it - domain.begin())) & 1u;
}

bool ParityVector::value_of(VertexId v) const {
    const auto it = std::lower_bound(domain.begin(), domain.end(), v);
    if (it == domain.end() || *it != v)
        throw std::invalid_argument("ParityVector: vertex not in domain");
    return (values >> (it - domain.begin())) & 1u;
}

std::vector<VertexId> z_set(const SamplePoint& sp, VertexId t, const PartialAssignment& fixed) {
    std::vector<VertexId> z;
    for (std::size_t j = 0; j < fixed.domain.size(); ++j)
        if (((fixed.values >> j) & 1u) == 0) z.push_back(fixed.domain[j]);
    // t is the largest vertex id, so appending keeps the domain sorted.
    if (sp.contains(t)) z.push_back(t);
    return z;
}

Gf2System build_equation_system(const SplitGraph& g, const SamplePoint& sp,
                                const PartialAssignment& fixed, const ParityVector& parity,
                                const QVector& q) {
    const std::size_t n = g.base.vertex_count() - 1;
    std::vector<std::size_t> col(g.base.vertex_count(), SIZE_MAX);
    std::vector<VertexId> free_vertices;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        if (!sp.contains(v)) {
            col[v] = free_vertices.size();
            free_vertices.push_back(v);
        }
    }

    const auto in_arcs = g.base.in_arcs();
    Gf2System sys{free_vertices.size(), {}};
    sys.rows.reserve(parity.domain.size());
    for (std::size_t r = 0; r < parity.domain.size(); ++r) {
        const VertexId v = parity.domain[r];
        Gf2Row row{BitVec(sys.num_vars), false};
        bool rhs = ((parity.values >> r) & 1u) != 0;
        rhs ^= q.bit_of(v) != 0;
        for (const auto& [w, arc_index] : in_arcs[v]) {
            (void)arc_index;
            if (col[w] != SIZE_MAX) row.coeffs.flip(col[w]);
            else if (w != g.t) rhs ^= fixed.value_of(w);
        }
        row.rhs = rhs;
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

BranchStream::BranchStream(const SamplePoint& sp, VertexId t, unsigned coeff_bits)
    : t_(t), coeff_bits_(coeff_bits) {
    if (coeff_bits < 1) throw std::invalid_argument("BranchStream: coeff_bits must be positive");
    for (VertexId v : sp.sampled)
        if (v != t) fixed_domain_.push_back(v);
    if (fixed_domain_.size() > 63)
        throw std::invalid_argument("BranchStream: sample too large to enumerate");
    t_sampled_ = sp.contains(t);
    reset_parity();
}

void BranchStream::reset_parity() {
    zset_.clear();
    for (std::size_t j = 0; j < fixed_domain_.size(); ++j)
        if (((fixed_mask_ >> j) & 1u) == 0) zset_.push_back(fixed_domain_[j]);
    if (t_sampled_) zset_.push_back(t_);
    if (zset_.size() > 64) throw std::invalid_argument("BranchStream: z-set too large");
    even_count_ = 0;
    even_positions_.clear();
    parity_done_ = false;
}

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] != i + n - k) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

void BranchStream::advance_parity() {
    if (next_combination(even_positions_, zset_.size())) return;
    ++even_count_;
    const std::size_t max_even = std::min<std::size_t>(coeff_bits_ - 1, zset_.size());
    if (even_count_ > max_even) {
        parity_done_ = true;
        return;
    }
    even_positions_.resize(even_count_);
    for (std::size_t i = 0; i < even_count_; ++i) even_positions_[i] = i;
}

bool BranchStream::next(SieveBranch& out) {
    while (true) {
        if (parity_done_) {
            if (fixed_domain_.empty() ||
                fixed_mask_ == (std::uint64_t{1} << fixed_domain_.size()) - 1) {
                fixed_done_ = true;
            } else {
                ++fixed_mask_;
                reset_parity();
            }
        }
        if (fixed_done_) return false;

        out.fixed = PartialAssignment{fixed_domain_, fixed_mask_};
        std::uint64_t parity_bits =
            zset_.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << zset_.size()) - 1;
        for (std::size_t pos : even_positions_) parity_bits &= ~(std::uint64_t{1} << pos);
        out.parity = ParityVector{zset_, parity_bits};

        advance_parity();
        return true;
    }
}

TermStream::TermStream(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                       unsigned coeff_bits)
    : g_(g), sp_(sp), q_(q), branches_(sp, g.t, coeff_bits) {
    num_vars_ = g.base.vertex_count() - 1;
    for (VertexId v = 0; v < static_cast<VertexId>(num_vars_); ++v)
        if (!sp.contains(v)) free_vertices_.push_back(v);
}

Assignment assemble_assignment(std::size_t num_vars, const PartialAssignment& fixed,
                               const std::vector<VertexId>& free_vertices, const BitVec& solution) {
    Assignment y(num_vars);
    for (std::size_t j = 0; j < fixed.domain.size(); ++j)
        y.set(fixed.domain[j], (fixed.values >> j) & 1u);
    for (std::size_t j = 0; j < free_vertices.size(); ++j) y.set(free_vertices[j], solution.get(j));
    return y;
}

bool TermStream::open_next_branch() {
    while (branches_.next(branch_)) {
        Gf2System sys = build_equation_system(g_, sp_, branch_.fixed, branch_.parity, q_);
        if (auto sol = solve(sys)) {
            solutions_.emplace(std::move(*sol));
            return true;
        }
        // Inconsistent parity pattern: no assignment realizes it, move on.
    }
    return false;
}

bool TermStream::next(Assignment& out) {
    while (true) {
        if (solutions_) {
            if (solutions_->next(solution_)) {
                out = assemble_assignment(num_vars_, branch_.fixed, free_vertices_, solution_);
                return true;
            }
            solutions_.reset();
        }
        if (!open_next_branch()) return false;
    }
}

std::uint64_t count_contributing(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                                 unsigned coeff_bits, std::uint64_t cap) {
    BranchStream branches(sp, g.t, coeff_bits);
    SieveBranch branch;
    std::uint64_t count = 0;
    while (branches.next(branch)) {
        Gf2System sys = build_equation_system(g, sp, branch.fixed, branch.parity, q);
        const auto sol = solve(sys);
        if (!sol) continue;
        const std::uint64_t here = solution_count(*sol);
        if (here > cap - count) {
            // Saturate: the caller only needs to know the cap was crossed.
            return cap == ~std::uint64_t{0} ? ~std::uint64_t{0} : cap + 1;
        }
        count += here;
    }
    return count;
}

namespace {

// Row z of Pascal's triangle.
std::vector<BigInt> binomial_row(std::size_t z) {
    std::vector<BigInt> row(z + 1);
    row[0] = 1;
    for (std::size_t i = 1; i <= z; ++i) row[i] = row[i - 1] * (z - i + 1) / i;
    return row;
}

}  // namespace

DyadicRational contributing_probability(std::size_t z_size, unsigned coeff_bits) {
    const auto row = binomial_row(z_size);
    BigInt sum = 0;
    for (std::size_t i = 0; i < coeff_bits && i <= z_size; ++i) sum += row[i];
    DyadicRational r{sum, -static_cast<long>(z_size)};
    r.normalize();
    return r;
}

DyadicRational expected_contributing_count(std::size_t num_vars, std::size_t sample_rest,
                                           bool t_sampled, unsigned coeff_bits) {
    if (sample_rest + (t_sampled ? 1 : 0) > num_vars)
        throw std::invalid_argument("expected_contributing_count: sample larger than graph");
    const std::size_t b = t_sampled ? 1 : 0;
    const auto choose = binomial_row(sample_rest);

    // sum over j of C(sample_rest, j) * Pr[fewer than coeff_bits of the j + b
    // polynomial-free rows stay even] * 2^(num_vars - sample_rest - j - b),
    // written over the common denominator 2^(2*sample_rest + b - num_vars).
    BigInt mantissa = 0;
    for (std::size_t j = 0; j <= sample_rest; ++j) {
        const std::size_t z = j + b;
        const auto inner = binomial_row(z);
        BigInt surviving = 0;
        for (std::size_t i = 0; i < coeff_bits && i <= z; ++i) surviving += inner[i];
        mantissa += choose[j] * surviving * (BigInt(1) << (sample_rest - j));
    }
    DyadicRational r{mantissa, static_cast<long>(num_vars) - 2 * static_cast<long>(sample_rest) -
                                   static_cast<long>(b)};
    r.normalize();
    return r;
}

}  // namespace hamsieve
