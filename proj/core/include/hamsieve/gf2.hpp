#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hamsieve {

// Fixed-length bit vector packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= bit;
        else words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void xor_assign(const BitVec& other);
    bool any() const;
    std::size_t count() const;
    // Index of the lowest set bit, or -1.
    std::ptrdiff_t lowest_set() const;
    // The bits as an integer; size must be at most 64.
    std::uint64_t to_mask() const;

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Gf2Row {
    BitVec coeffs;
    bool rhs;
};

struct Gf2System {
    std::size_t num_vars;
    std::vector<Gf2Row> rows;
};

// Reduced description of the affine solution set: one particular solution
// (free variables zero) plus an independent basis of the homogeneous kernel.
struct Gf2Solution {
    BitVec particular;
    std::vector<BitVec> null_basis;
};

// Gaussian elimination with leftmost pivots; nullopt when inconsistent.
std::optional<Gf2Solution> solve(const Gf2System& sys);

// The number of solutions, 2^|null_basis|; basis size must be below 64.
std::uint64_t solution_count(const Gf2Solution& sol);

// Walks all 2^|null_basis| solutions in Gray-code order, so consecutive
// solutions differ by a single basis vector xor. O(num_vars) state.
class SolutionStream {
public:
    explicit SolutionStream(Gf2Solution sol);

    // Copies the next solution into out (resized as needed); false when done.
    bool next(BitVec& out);
    std::uint64_t total() const { return total_; }

private:
    Gf2Solution sol_;
    BitVec current_;
    std::uint64_t index_ = 0;
    std::uint64_t total_;
};

}  // namespace hamsieve
