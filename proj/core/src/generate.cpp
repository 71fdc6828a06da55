#include "hamsieve/generate.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hamsieve {

DirectedGraph generate_random_digraph(VertexId n, double delta, bool ensure_hamiltonian,
                                      Philox& rng) {
    if (n < 2) throw std::invalid_argument("generate_random_digraph: need at least two vertices");
    if (!(delta > 0.0)) throw std::invalid_argument("generate_random_digraph: delta must be positive");
    const std::uint64_t target = static_cast<std::uint64_t>(std::llround(delta * n));
    const std::uint64_t max_arcs = static_cast<std::uint64_t>(n) * (n - 1);
    if (target > max_arcs)
        throw std::invalid_argument("generate_random_digraph: arc budget exceeds simple digraph");
    if (ensure_hamiltonian && target < n)
        throw std::invalid_argument("generate_random_digraph: a Hamiltonian cycle needs n arcs");

    std::vector<Arc> arcs;
    arcs.reserve(target);
    std::unordered_set<std::uint64_t> used;
    auto key = [](VertexId a, VertexId b) { return static_cast<std::uint64_t>(a) << 32 | b; };

    if (ensure_hamiltonian) {
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), VertexId{0});
        for (VertexId i = 0; i + 1 < n; ++i) {
            const std::uint64_t j = i + rng.uniform_below(n - i);
            std::swap(order[i], order[static_cast<std::size_t>(j)]);
        }
        for (VertexId i = 0; i < n; ++i) {
            const Arc a{order[i], order[(i + 1) % n]};
            arcs.push_back(a);
            used.insert(key(a.tail, a.head));
        }
    }

    if (target > max_arcs / 2) {
        // Dense: pick the remainder by shuffling the unused arc universe.
        std::vector<Arc> rest;
        rest.reserve(static_cast<std::size_t>(max_arcs) - arcs.size());
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v)
                if (u != v && !used.count(key(u, v))) rest.push_back({u, v});
        for (std::size_t i = 0; i < rest.size() && arcs.size() < target; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(rest.size() - i));
            std::swap(rest[i], rest[j]);
            arcs.push_back(rest[i]);
        }
    } else {
        while (arcs.size() < target) {
            const VertexId u = static_cast<VertexId>(rng.uniform_below(n));
            const VertexId v = static_cast<VertexId>(rng.uniform_below(n));
            if (u == v || !used.insert(key(u, v)).second) continue;
            arcs.push_back({u, v});
        }
    }
    return DirectedGraph(n, std::move(arcs));
}

}  // namespace hamsieve
