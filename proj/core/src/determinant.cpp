#include "hamsieve/determinant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hamsieve {

RingMatrix::RingMatrix(std::size_t dim, RingParams p) : dim_(dim), params_(p) {
    p.validate();
    cells_.assign(dim * dim, RingElement::zero(p));
}

RingMatrix RingMatrix::identity(std::size_t dim, RingParams p) {
    RingMatrix m(dim, p);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = RingElement::one(p);
    return m;
}

namespace {

// Bird's iteration on a dense matrix: X_1 = A, X_{j+1} = mu(X_j) * A, where
// mu replaces the diagonal with negated suffix sums of the old diagonal and
// drops the lower triangle. det(A) = (-1)^(n-1) * X_n[0][0].
RingElement det_bird(const std::vector<RingElement>& a, std::size_t n, RingParams p) {
    if (n == 0) return RingElement::one(p);
    if (n == 1) return a[0];

    auto cell = [n](std::vector<RingElement>& m, std::size_t i, std::size_t j) -> RingElement& {
        return m[i * n + j];
    };
    auto ccell = [n](const std::vector<RingElement>& m, std::size_t i,
                     std::size_t j) -> const RingElement& { return m[i * n + j]; };

    std::vector<RingElement> x = a;
    std::vector<RingElement> mu(n * n, RingElement::zero(p));
    std::vector<RingElement> next(n * n, RingElement::zero(p));

    for (std::size_t step = 0; step + 1 < n; ++step) {
        // mu(x): upper triangle kept, diagonal i <- -(x[i+1][i+1] + ... + x[n-1][n-1]).
        RingElement suffix = RingElement::zero(p);
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = 0; j < n; ++j)
                cell(mu, i, j) = j > i ? ccell(x, i, j) : RingElement::zero(p);
            cell(mu, i, i) = -suffix;
            suffix += ccell(x, i, i);
        }
        // next = mu * a; row i of mu is zero left of the diagonal.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                RingElement sum = RingElement::zero(p);
                for (std::size_t l = i; l < n; ++l) {
                    const RingElement& lhs = ccell(mu, i, l);
                    if (lhs.is_zero()) continue;
                    sum += lhs * ccell(a, l, j);
                }
                cell(next, i, j) = std::move(sum);
            }
        }
        x.swap(next);
    }

    RingElement result = std::move(x[0]);
    if ((n - 1) % 2 != 0) result = -result;
    return result;
}

}  // namespace

RingElement det(const RingMatrix& m) {
    const RingParams p = m.params();
    const std::size_t n = m.dim();

    // Peel off rows whose off-diagonal entries are all zero: each contributes
    // its diagonal entry as a factor and shrinks the problem. Removing a
    // column can expose new such rows, so iterate to a fixpoint.
    std::vector<std::size_t> live(n);
    std::iota(live.begin(), live.end(), std::size_t{0});
    RingElement factor = RingElement::one(p);

    bool changed = true;
    while (changed && !live.empty()) {
        changed = false;
        for (std::size_t idx = 0; idx < live.size(); ++idx) {
            const std::size_t r = live[idx];
            bool diagonal_only = true;
            for (std::size_t c : live) {
                if (c != r && !m.at(r, c).is_zero()) {
                    diagonal_only = false;
                    break;
                }
            }
            if (!diagonal_only) continue;
            factor = factor * m.at(r, r);
            if (factor.is_zero()) return RingElement::zero(p);
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(idx));
            changed = true;
            --idx;
        }
    }

    if (live.empty()) return factor;

    std::vector<RingElement> core;
    core.reserve(live.size() * live.size());
    for (std::size_t r : live)
        for (std::size_t c : live) core.push_back(m.at(r, c));

    return factor * det_bird(core, live.size(), p);
}

RingElement det_reference(const RingMatrix& m) {
    const std::size_t n = m.dim();
    if (n > 8) throw std::invalid_argument("det_reference: dimension capped at 8");
    const RingParams p = m.params();
    if (n == 0) return RingElement::one(p);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    RingElement sum = RingElement::zero(p);
    do {
        RingElement prod = RingElement::one(p);
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m.at(i, perm[i]);
        if (prod.is_zero()) continue;
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        sum += inversions % 2 == 0 ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

}  // namespace hamsieve
