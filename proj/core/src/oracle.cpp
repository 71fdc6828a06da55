#include "hamsieve/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace hamsieve {

bool is_hamiltonian_bruteforce(const DirectedGraph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("is_hamiltonian_bruteforce: capped at 24 vertices");
    if (n < 2) return false;  // no self-loops, so no 1-cycles
    const auto in_deg = g.in_degrees();
    const auto out_deg = g.out_degrees();
    for (std::uint32_t v = 0; v < n; ++v)
        if (in_deg[v] == 0 || out_deg[v] == 0) return false;

    // adj[v] = bitmask of out-neighbors.
    std::vector<std::uint32_t> adj(n, 0), radj(n, 0);
    for (const Arc& a : g.arcs()) {
        adj[a.tail] |= std::uint32_t{1} << a.head;
        radj[a.head] |= std::uint32_t{1} << a.tail;
    }

    // dp[S] = endpoints v reachable from vertex 0 by a simple path through
    // exactly {0} + S, for S over the other n-1 vertices shifted down a bit.
    const std::uint32_t rest = n - 1;
    std::vector<std::uint32_t> dp(std::size_t{1} << rest, 0);
    auto lift = [](std::uint32_t mask) { return mask << 1; };  // rest-index -> vertex bit
    for (std::uint32_t v = 1; v < n; ++v)
        if (adj[0] & (std::uint32_t{1} << v)) dp[std::uint32_t{1} << (v - 1)] |= std::uint32_t{1} << v;

    for (std::uint32_t set = 1; set < (std::uint32_t{1} << rest); ++set) {
        const std::uint32_t ends = dp[set];
        if (!ends) continue;
        if (set == (std::uint32_t{1} << rest) - 1) {
            // Full path; close the cycle back to 0.
            if (ends & radj[0]) return true;
            continue;
        }
        for (std::uint32_t e = ends; e;) {
            const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(e));
            e &= e - 1;
            const std::uint32_t nexts = adj[v] & ~lift(set) & ~1u;
            for (std::uint32_t m = nexts; m;) {
                const std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(m));
                m &= m - 1;
                dp[set | (std::uint32_t{1} << (w - 1))] |= std::uint32_t{1} << w;
            }
        }
    }
    return false;
}

namespace {

std::uint64_t count_paths_dfs(const std::vector<std::uint32_t>& adj, std::uint32_t from,
                              std::uint32_t to, std::uint32_t visited, std::uint32_t full) {
    if (visited == full) return from == to ? 1 : 0;
    if (from == to) return 0;
    std::uint64_t total = 0;
    for (std::uint32_t m = adj[from] & ~visited; m;) {
        const std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(m));
        m &= m - 1;
        total += count_paths_dfs(adj, w, to, visited | (std::uint32_t{1} << w), full);
    }
    return total;
}

std::vector<std::uint32_t> adjacency_masks(const DirectedGraph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (const Arc& a : g.arcs()) adj[a.tail] |= std::uint32_t{1} << a.head;
    return adj;
}

}  // namespace

std::uint64_t count_hamiltonian_cycles(const DirectedGraph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("count_hamiltonian_cycles: capped at 12 vertices");
    if (n < 2) return 0;
    const auto adj = adjacency_masks(g);
    // Anchor at 0: each cycle is a Hamiltonian path 0 -> ... -> v closed by
    // an arc v -> 0, counted once via its unique final vertex.
    std::uint64_t total = 0;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t v = 1; v < n; ++v)
        if (adj[v] & 1u) total += count_paths_dfs(adj, 0, v, 1u, full);
    return total;
}

std::uint64_t count_hamiltonian_st_paths(const SplitGraph& g) {
    const std::uint32_t n = g.base.vertex_count();
    if (n > 13) throw std::invalid_argument("count_hamiltonian_st_paths: capped at 12 + 1 vertices");
    const auto adj = adjacency_masks(g.base);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    return count_paths_dfs(adj, g.s, g.t, std::uint32_t{1} << g.s, full);
}

namespace {

void direct_dfs(const std::vector<std::vector<std::pair<VertexId, std::size_t>>>& out_arcs,
                const SamplePoint& sp, VertexId at, VertexId t, std::uint32_t visited,
                std::uint32_t full, const RingElement& prefix, RingElement& sum, RingParams p) {
    if (visited == full) {
        if (at == t) sum += prefix;
        return;
    }
    if (at == t) return;
    for (const auto& [head, arc_index] : out_arcs[at]) {
        if (visited & (std::uint32_t{1} << head)) continue;
        direct_dfs(out_arcs, sp, head, t, visited | (std::uint32_t{1} << head), full,
                   prefix * arc_value(sp, arc_index, p), sum, p);
    }
}

}  // namespace

RingElement evaluate_p_direct(const SplitGraph& g, const SamplePoint& sp, RingParams p) {
    const std::uint32_t n = g.base.vertex_count();
    if (n > 13) throw std::invalid_argument("evaluate_p_direct: capped at 12 + 1 vertices");
    RingElement sum = RingElement::zero(p);
    direct_dfs(g.base.out_arcs(), sp, g.s, g.t, std::uint32_t{1} << g.s,
               (std::uint32_t{1} << n) - 1, RingElement::one(p), sum, p);
    return sum;
}

RingElement evaluate_p_fullsum(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                               RingParams p) {
    const std::size_t n = g.base.vertex_count() - 1;
    if (n > 16) throw std::invalid_argument("evaluate_p_fullsum: capped at n = 16");
    TermEvaluator eval(g, sp, q, p);
    RingElement sum = RingElement::zero(p);
    Assignment y(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t v = 0; v < n; ++v) y.set(v, (bits >> v) & 1u);
        sum += eval.value(y);
    }
    return sum;
}

}  // namespace hamsieve
