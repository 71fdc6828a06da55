#pragma once

#include <cstdint>

#include "hamsieve/fingerprint.hpp"
#include "hamsieve/graph.hpp"
#include "hamsieve/ring.hpp"

namespace hamsieve {

// Exact Hamiltonian cycle test by subset dynamic programming over endpoint
// sets; exponential but airtight. Vertex count capped at 24.
bool is_hamiltonian_bruteforce(const DirectedGraph& g);

// Exhaustive counts for cross-checks; both capped at 12 vertices (input side).
std::uint64_t count_hamiltonian_cycles(const DirectedGraph& g);
std::uint64_t count_hamiltonian_st_paths(const SplitGraph& g);

// The fingerprint polynomial evaluated the definitional way: enumerate every
// Hamiltonian s-t path by depth-first search and sum the products of its arc
// values. Input side capped at 12 vertices.
RingElement evaluate_p_direct(const SplitGraph& g, const SamplePoint& sp, RingParams p);

// The same value through the unsieved inclusion-exclusion: sum the signed
// perturbed-Laplacian determinant over all 2^n activation assignments.
// Capped at n = 16. The perturbation q provably cancels from the total, which
// the tests lean on.
RingElement evaluate_p_fullsum(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                               RingParams p);

}  // namespace hamsieve
