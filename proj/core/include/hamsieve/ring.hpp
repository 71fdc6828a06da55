#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hamsieve {

// The coefficient ring Z_{2^coeff_bits}, truncated after x^(trunc_len - 1).
// Residues live in machine words, so coeff_bits can be at most 64; reduction
// is a bitmask. Deliberately a ring with zero divisors: whole products vanish
// once every contributing path weight collides modulo 2^coeff_bits, which is
// exactly what the contribution sieve exploits.
struct RingParams {
    unsigned coeff_bits;    // modulus exponent k, 1..64
    std::size_t trunc_len;  // number of retained coefficients m, >= 1

    std::uint64_t mask() const {
        return coeff_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << coeff_bits) - 1;
    }
    void validate() const;
};

inline bool operator==(RingParams a, RingParams b) {
    return a.coeff_bits == b.coeff_bits && a.trunc_len == b.trunc_len;
}
inline bool operator!=(RingParams a, RingParams b) { return !(a == b); }

// A ring element is logically a dense vector of trunc_len residues.
// Trailing zeros are not stored; coeff() hides that.
class RingElement {
public:
    static RingElement zero(RingParams p);
    static RingElement one(RingParams p);
    // coeff * x^degree; degrees at or beyond trunc_len collapse to zero.
    static RingElement monomial(RingParams p, std::size_t degree, std::uint64_t coeff);
    // Residue vector constructor; v may be shorter than trunc_len.
    static RingElement from_coeffs(RingParams p, std::vector<std::uint64_t> v);

    RingParams params() const { return params_; }
    std::uint64_t coeff(std::size_t degree) const {
        return degree < coeffs_.size() ? coeffs_[degree] : 0;
    }
    bool is_zero() const { return coeffs_.empty(); }
    // Highest degree with a nonzero residue; zero elements report -1.
    std::ptrdiff_t max_degree() const {
        return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
    }
    std::size_t nonzero_count() const;

    // "c0 + c1*x + c2*x^2" rendering of the nonzero terms; "0" when zero.
    std::string to_string() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator+=(const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

private:
    explicit RingElement(RingParams p) : params_(p) {}
    void trim();

    RingParams params_;
    std::vector<std::uint64_t> coeffs_;  // masked residues, trailing zeros trimmed
};

}  // namespace hamsieve
