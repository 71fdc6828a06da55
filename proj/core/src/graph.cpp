#include "hamsieve/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

namespace hamsieve {

namespace {

std::uint64_t arc_key(Arc a) {
    return static_cast<std::uint64_t>(a.tail) << 32 | a.head;
}

}  // namespace

DirectedGraph::DirectedGraph(VertexId vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        if (a.tail >= vertex_count_ || a.head >= vertex_count_)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.tail == a.head)
            throw std::invalid_argument("self-loops are not allowed");
        if (!seen.insert(arc_key(a)).second)
            throw std::invalid_argument("duplicate arc " + std::to_string(a.tail) + "->" +
                                        std::to_string(a.head));
    }
}

std::vector<std::uint32_t> DirectedGraph::out_degrees() const {
    std::vector<std::uint32_t> deg(vertex_count_, 0);
    for (const Arc& a : arcs_) ++deg[a.tail];
    return deg;
}

std::vector<std::uint32_t> DirectedGraph::in_degrees() const {
    std::vector<std::uint32_t> deg(vertex_count_, 0);
    for (const Arc& a : arcs_) ++deg[a.head];
    return deg;
}

std::vector<std::vector<std::pair<VertexId, std::size_t>>> DirectedGraph::in_arcs() const {
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(vertex_count_);
    for (std::size_t i = 0; i < arcs_.size(); ++i) adj[arcs_[i].head].emplace_back(arcs_[i].tail, i);
    return adj;
}

std::vector<std::vector<std::pair<VertexId, std::size_t>>> DirectedGraph::out_arcs() const {
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(vertex_count_);
    for (std::size_t i = 0; i < arcs_.size(); ++i) adj[arcs_[i].tail].emplace_back(arcs_[i].head, i);
    return adj;
}

Ratio average_outdegree(const DirectedGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("average_outdegree: empty graph");
    std::uint64_t num = g.arc_count();
    std::uint64_t den = g.vertex_count();
    const std::uint64_t d = std::gcd(num, den);
    return {num / d, den / d};
}

SplitGraph split_vertex(const DirectedGraph& g, VertexId u) {
    if (g.vertex_count() < 2) throw std::invalid_argument("split_vertex: need at least two vertices");
    if (u >= g.vertex_count()) throw std::invalid_argument("split_vertex: vertex out of range");
    const VertexId t = g.vertex_count();
    std::vector<Arc> arcs = g.arcs();
    for (Arc& a : arcs) {
        // u keeps its out-arcs (it becomes s); its in-arcs are redirected to t.
        if (a.head == u) a.head = t;
    }
    return SplitGraph{DirectedGraph(g.vertex_count() + 1, std::move(arcs)), u, t, u};
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;

    // Next payload line with comments and blanks stripped; empty view + false at end.
    bool next_line(std::string_view& out, std::size_t& out_line) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view raw = text.substr(pos, eol - pos);
            const std::size_t this_line = line;
            pos = eol + (eol < text.size() ? 1 : 0);
            ++line;
            if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            const std::size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string_view::npos) continue;
            const std::size_t e = raw.find_last_not_of(" \t\r");
            out = raw.substr(b, e - b + 1);
            out_line = this_line;
            return true;
        }
        return false;
    }
};

// Two whitespace-separated non-negative integers and nothing else.
bool parse_pair(std::string_view s, std::uint64_t& a, std::uint64_t& b) {
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{}) return false;
    p = r1.ptr;
    if (p == end || (*p != ' ' && *p != '\t')) return false;
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{}) return false;
    for (p = r2.ptr; p != end; ++p)
        if (*p != ' ' && *p != '\t') return false;
    return true;
}

}  // namespace

DirectedGraph parse_graph(std::string_view text) {
    Cursor cur{text};
    std::string_view ln;
    std::size_t lno = 0;
    if (!cur.next_line(ln, lno)) throw ParseError(cur.line, "missing header line \"n m\"");

    std::uint64_t n = 0, m = 0;
    if (!parse_pair(ln, n, m)) throw ParseError(lno, "expected header \"n m\"");
    if (n > 0xFFFFFFFFull) throw ParseError(lno, "vertex count too large");

    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!cur.next_line(ln, lno))
            throw ParseError(cur.line, "expected " + std::to_string(m) + " arcs, got " +
                                           std::to_string(i));
        std::uint64_t tail = 0, head = 0;
        if (!parse_pair(ln, tail, head)) throw ParseError(lno, "expected arc \"tail head\"");
        if (tail >= n || head >= n) throw ParseError(lno, "arc endpoint out of range");
        if (tail == head) throw ParseError(lno, "self-loop");
        arcs.push_back({static_cast<VertexId>(tail), static_cast<VertexId>(head)});
    }
    if (cur.next_line(ln, lno)) throw ParseError(lno, "trailing content after arc list");

    try {
        return DirectedGraph(static_cast<VertexId>(n), std::move(arcs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lno, e.what());  // duplicate arcs surface here
    }
}

}  // namespace hamsieve
