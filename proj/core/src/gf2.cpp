#include "hamsieve/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace hamsieve {

void BitVec::xor_assign(const BitVec& other) {
    if (size_ != other.size_) throw std::invalid_argument("BitVec: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVec::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::ptrdiff_t BitVec::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

std::uint64_t BitVec::to_mask() const {
    if (size_ > 64) throw std::invalid_argument("BitVec: to_mask needs size <= 64");
    return words_.empty() ? 0 : words_[0];
}

std::optional<Gf2Solution> solve(const Gf2System& sys) {
    for (const Gf2Row& row : sys.rows)
        if (row.coeffs.size() != sys.num_vars)
            throw std::invalid_argument("Gf2System: row width mismatch");

    std::vector<Gf2Row> rows = sys.rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;

    for (std::size_t col = 0; col < sys.num_vars && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].coeffs.get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].coeffs.get(col)) {
                rows[r].coeffs.xor_assign(rows[rank].coeffs);
                rows[r].rhs ^= rows[rank].rhs;
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r].rhs) return std::nullopt;  // 0 = 1

    std::vector<bool> is_pivot(sys.num_vars, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    Gf2Solution sol;
    sol.particular = BitVec(sys.num_vars);
    for (std::size_t r = 0; r < rank; ++r) sol.particular.set(pivot_cols[r], rows[r].rhs);

    for (std::size_t col = 0; col < sys.num_vars; ++col) {
        if (is_pivot[col]) continue;
        BitVec basis(sys.num_vars);
        basis.set(col, true);
        // Setting a free variable drags each pivot variable along by the
        // coefficient in that pivot's reduced row.
        for (std::size_t r = 0; r < rank; ++r)
            if (rows[r].coeffs.get(col)) basis.set(pivot_cols[r], true);
        sol.null_basis.push_back(std::move(basis));
    }
    return sol;
}

std::uint64_t solution_count(const Gf2Solution& sol) {
    if (sol.null_basis.size() >= 64)
        throw std::invalid_argument("solution_count: too many free variables");
    return std::uint64_t{1} << sol.null_basis.size();
}

SolutionStream::SolutionStream(Gf2Solution sol) : sol_(std::move(sol)) {
    total_ = solution_count(sol_);
    current_ = sol_.particular;
}

bool SolutionStream::next(BitVec& out) {
    if (index_ == total_) return false;
    out = current_;
    ++index_;
    if (index_ < total_) {
        // Gray code: step i flips the basis vector indexed by the lowest set
        // bit of i, so each successive solution is one xor away.
        current_.xor_assign(sol_.null_basis[static_cast<std::size_t>(std::countr_zero(index_))]);
    }
    return true;
}

}  // namespace hamsieve
