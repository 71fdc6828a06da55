#pragma once

#include <cstddef>
#include <vector>

#include "hamsieve/ring.hpp"

namespace hamsieve {

// Square matrix over the truncated polynomial ring, row-major.
class RingMatrix {
public:
    RingMatrix(std::size_t dim, RingParams p);

    std::size_t dim() const { return dim_; }
    RingParams params() const { return params_; }

    RingElement& at(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }
    const RingElement& at(std::size_t row, std::size_t col) const {
        return cells_[row * dim_ + col];
    }

    static RingMatrix identity(std::size_t dim, RingParams p);

private:
    std::size_t dim_;
    RingParams params_;
    std::vector<RingElement> cells_;
};

// Determinant by Bird's division-free iteration: n - 1 matrix products, no
// divisions or fractions, which matters because the ring has zero divisors.
// Rows whose off-diagonal entries are all zero are first split off as scalar
// factors (Laplace steps at diagonal pivots); the Laplacians this sees get a
// such a row for every vertex assigned zero, so the iteration usually runs on
// a much smaller core.
RingElement det(const RingMatrix& m);

// Leibniz expansion over all permutations; reference oracle, dim <= 8.
RingElement det_reference(const RingMatrix& m);

}  // namespace hamsieve
