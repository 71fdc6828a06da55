#include "hamsieve/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamsieve {

void RingParams::validate() const {
    if (coeff_bits < 1 || coeff_bits > 64)
        throw std::invalid_argument("RingParams: coeff_bits must be in 1..64");
    if (trunc_len < 1) throw std::invalid_argument("RingParams: trunc_len must be positive");
}

void RingElement::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RingElement RingElement::zero(RingParams p) {
    p.validate();
    return RingElement(p);
}

RingElement RingElement::one(RingParams p) {
    return monomial(p, 0, 1);
}

RingElement RingElement::monomial(RingParams p, std::size_t degree, std::uint64_t coeff) {
    p.validate();
    RingElement e(p);
    coeff &= p.mask();
    if (degree < p.trunc_len && coeff != 0) {
        e.coeffs_.assign(degree + 1, 0);
        e.coeffs_[degree] = coeff;
    }
    return e;
}

RingElement RingElement::from_coeffs(RingParams p, std::vector<std::uint64_t> v) {
    p.validate();
    if (v.size() > p.trunc_len) v.resize(p.trunc_len);
    RingElement e(p);
    for (std::uint64_t& c : v) c &= p.mask();
    e.coeffs_ = std::move(v);
    e.trim();
    return e;
}

std::size_t RingElement::nonzero_count() const {
    std::size_t n = 0;
    for (std::uint64_t c : coeffs_)
        if (c != 0) ++n;
    return n;
}

std::string RingElement::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(coeffs_[d]);
        if (d == 1) out += "*x";
        else if (d > 1) out += "*x^" + std::to_string(d);
    }
    return out;
}

namespace {

void require_same(RingParams a, RingParams b) {
    if (a != b) throw std::invalid_argument("ring parameter mismatch");
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    r += b;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& b) {
    require_same(params_, b.params_);
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
    const std::uint64_t mask = params_.mask();
    for (std::size_t d = 0; d < b.coeffs_.size(); ++d)
        coeffs_[d] = (coeffs_[d] + b.coeffs_[d]) & mask;
    trim();
    return *this;
}

RingElement operator-(const RingElement& a) {
    RingElement r = a;
    const std::uint64_t mask = r.params_.mask();
    for (std::uint64_t& c : r.coeffs_) c = (0 - c) & mask;
    return r;  // no new zeros can appear, so no trim needed
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    return a + (-b);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same(a.params_, b.params_);
    RingElement r(a.params_);
    if (a.is_zero() || b.is_zero()) return r;

    // Truncated convolution. Iterate the operand with fewer nonzero terms and
    // scatter shifted copies of the other; for the monomial-heavy matrices
    // this algorithm meets, that beats the quadratic schoolbook loop by far
    // while producing the identical coefficient vector.
    const RingElement& sparse = a.nonzero_count() <= b.nonzero_count() ? a : b;
    const RingElement& dense = (&sparse == &a) ? b : a;

    const std::size_t cap = a.params_.trunc_len;
    const std::size_t full = sparse.coeffs_.size() + dense.coeffs_.size() - 1;
    r.coeffs_.assign(std::min(cap, full), 0);
    const std::uint64_t mask = r.params_.mask();
    for (std::size_t i = 0; i < sparse.coeffs_.size(); ++i) {
        const std::uint64_t c = sparse.coeffs_[i];
        if (c == 0 || i >= r.coeffs_.size()) continue;
        const std::size_t lim = std::min(dense.coeffs_.size(), r.coeffs_.size() - i);
        for (std::size_t j = 0; j < lim; ++j)
            r.coeffs_[i + j] = (r.coeffs_[i + j] + c * dense.coeffs_[j]) & mask;
    }
    r.trim();
    return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
}

}  // namespace hamsieve
