#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamsieve {

using VertexId = std::uint32_t;

struct Arc {
    VertexId tail;
    VertexId head;
};

inline bool operator==(Arc a, Arc b) { return a.tail == b.tail && a.head == b.head; }

// Raised for malformed edge-list input; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Plain arc-list digraph with dense 0-based vertex ids.
// Self-loops and duplicate arcs are rejected at construction.
class DirectedGraph {
public:
    DirectedGraph(VertexId vertex_count, std::vector<Arc> arcs);

    VertexId vertex_count() const { return vertex_count_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }

    std::vector<std::uint32_t> out_degrees() const;
    std::vector<std::uint32_t> in_degrees() const;

    // in_arcs()[v] lists (tail, arc index) pairs of arcs entering v,
    // in arc-list order.
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> in_arcs() const;
    // out_arcs()[v] lists (head, arc index) pairs of arcs leaving v.
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> out_arcs() const;

private:
    VertexId vertex_count_;
    std::vector<Arc> arcs_;
};

// Exact arc density |A| / n, reduced.
struct Ratio {
    std::uint64_t num;
    std::uint64_t den;
};
inline bool operator==(Ratio a, Ratio b) { return a.num == b.num && a.den == b.den; }

Ratio average_outdegree(const DirectedGraph& g);

// Cycles through u in the original graph correspond one-to-one with
// Hamiltonian s-t paths here: u's slot keeps its out-arcs and becomes the
// source s, and a fresh sink t = n receives u's former in-arcs.
struct SplitGraph {
    DirectedGraph base;  // n + 1 vertices
    VertexId s;
    VertexId t;
    VertexId split_source;  // the vertex of the input graph that became s
};

SplitGraph split_vertex(const DirectedGraph& g, VertexId u);

// Edge-list format: first non-comment line "n m", then m lines "tail head",
// 0-indexed; '#' starts a comment.
DirectedGraph parse_graph(std::string_view text);

}  // namespace hamsieve
