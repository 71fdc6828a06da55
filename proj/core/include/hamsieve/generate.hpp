#pragma once

#include "hamsieve/graph.hpp"
#include "hamsieve/random.hpp"

namespace hamsieve {

// Random digraph on n vertices with round(delta * n) distinct arcs, no
// self-loops. With ensure_hamiltonian set, a random permutation cycle is
// planted first and the remaining arcs fill in around it; the instance is
// then Hamiltonian by construction.
DirectedGraph generate_random_digraph(VertexId n, double delta, bool ensure_hamiltonian,
                                      Philox& rng);

}  // namespace hamsieve
