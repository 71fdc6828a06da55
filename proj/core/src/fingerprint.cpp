#include "hamsieve/fingerprint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hamsieve {

void Params::validate(std::size_t n) const {
    if (sample_size < 1 || sample_size > n)
        throw std::invalid_argument("Params: sample_size must be in 1..n");
    ring().validate();
    if (max_weight < 1) throw std::invalid_argument("Params: max_weight must be positive");
    if (repetitions < 1) throw std::invalid_argument("Params: repetitions must be positive");
    if (abort_factor < 1) throw std::invalid_argument("Params: abort_factor must be positive");
}

Params derive_params(const SplitGraph& g, const ParamOverrides& overrides) {
    const std::size_t n = g.base.vertex_count() - 1;  // input graph size
    const std::size_t arcs = g.base.arc_count();
    if (n < 1) throw std::invalid_argument("derive_params: degenerate split graph");

    Params p{};
    if (overrides.sample_size) {
        p.sample_size = *overrides.sample_size;
    } else if (arcs == 0) {
        p.sample_size = 1;
    } else {
        // ceil(n / (20 d)) with d = |A|/n, i.e. ceil(n^2 / (20 |A|)).
        const std::size_t num = n * n;
        const std::size_t den = 20 * arcs;
        p.sample_size = std::clamp<std::size_t>((num + den - 1) / den, 1, n);
    }

    p.coeff_bits = overrides.coeff_bits
                       ? *overrides.coeff_bits
                       : static_cast<unsigned>(std::max<std::size_t>(1, (p.sample_size + 9) / 10));

    p.max_weight = overrides.max_weight ? *overrides.max_weight
                                        : std::max<std::uint64_t>(1, 100 * arcs);
    p.trunc_len = overrides.trunc_len ? *overrides.trunc_len
                                      : static_cast<std::size_t>(n * p.max_weight + 1);

    p.repetitions =
        overrides.repetitions
            ? *overrides.repetitions
            : std::max(1u, static_cast<unsigned>(std::ceil(100.0 * std::log(static_cast<double>(n)))));

    p.abort_factor = overrides.abort_factor ? *overrides.abort_factor
                                            : static_cast<std::uint64_t>(n);

    p.validate(n);
    return p;
}

SamplePoint sample_point(const SplitGraph& g, const Params& params, Philox& rng) {
    const VertexId vcount = g.base.vertex_count();
    const std::size_t n = vcount - 1;
    params.validate(n);

    // Uniform subset of V minus s via a partial Fisher-Yates shuffle.
    std::vector<VertexId> pool;
    pool.reserve(n);
    for (VertexId v = 0; v < vcount; ++v)
        if (v != g.s) pool.push_back(v);
    SamplePoint sp;
    sp.in_sample.assign(vcount, 0);
    for (std::size_t i = 0; i < params.sample_size; ++i) {
        const std::size_t j = i + rng.uniform_below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        sp.in_sample[pool[i]] = 1;
    }
    sp.sampled.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(params.sample_size));
    std::sort(sp.sampled.begin(), sp.sampled.end());

    // Weights drawn in arc-list order so a seed pins the whole point.
    sp.arc_weight.assign(g.base.arc_count(), 0);
    const auto& arcs = g.base.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (!sp.contains(arcs[i].head))
            sp.arc_weight[i] = rng.uniform_in(1, params.max_weight);
    return sp;
}

RingElement arc_value(const SamplePoint& sp, std::size_t arc_index, RingParams p) {
    const std::uint64_t w = sp.arc_weight[arc_index];
    return w == 0 ? RingElement::one(p) : RingElement::monomial(p, w, 1);
}

int QVector::bit_of(VertexId v) const {
    const auto it = std::lower_bound(domain.begin(), domain.end(), v);
    if (it == domain.end() || *it != v)
        throw std::invalid_argument("QVector: vertex not in domain");
    return bits[static_cast<std::size_t>(it - domain.begin())];
}

QVector sample_q(const SamplePoint& sp, Philox& rng) {
    QVector q;
    q.domain = sp.sampled;
    q.bits.reserve(q.domain.size());
    for (std::size_t i = 0; i < q.domain.size(); ++i)
        q.bits.push_back(static_cast<std::uint8_t>(rng.uniform_below(2)));
    return q;
}

RingMatrix build_perturbed_laplacian(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                                     const Assignment& y, RingParams p) {
    const VertexId vcount = g.base.vertex_count();
    const std::size_t n = vcount - 1;
    if (y.size() != n) throw std::invalid_argument("assignment length must equal n");

    // Rows and columns are V minus s in ascending vertex order.
    auto index_of = [&](VertexId v) -> std::size_t { return v < g.s ? v : v - 1; };

    RingMatrix m(n, p);
    for (std::size_t i = 0; i < g.base.arc_count(); ++i) {
        const Arc a = g.base.arcs()[i];
        const bool tail_active = a.tail != g.t && y.get(a.tail);
        if (!tail_active) continue;
        const RingElement z = arc_value(sp, i, p);
        m.at(index_of(a.head), index_of(a.head)) += z;
        if (a.tail != g.s) m.at(index_of(a.tail), index_of(a.head)) += -z;
    }
    for (std::size_t i = 0; i < sp.sampled.size(); ++i) {
        const VertexId v = sp.sampled[i];
        if (q.bits[i]) m.at(index_of(v), index_of(v)) += -RingElement::one(p);
    }
    return m;
}

TermEvaluator::TermEvaluator(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                             RingParams p)
    : params_(p), num_vars_(g.base.vertex_count() - 1), s_(g.s), t_(g.t) {
    p.validate();
    if (q.domain != sp.sampled)
        throw std::invalid_argument("TermEvaluator: q domain must match the sample");
    const VertexId vcount = g.base.vertex_count();
    in_arcs_.resize(vcount);
    out_arcs_.resize(vcount);
    const auto& arcs = g.base.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        in_arcs_[arcs[i].head].push_back({arcs[i].tail, sp.arc_weight[i]});
        out_arcs_[arcs[i].tail].emplace_back(arcs[i].head, sp.arc_weight[i]);
    }
    q_of_.assign(vcount, -1);
    for (std::size_t i = 0; i < sp.sampled.size(); ++i)
        q_of_[sp.sampled[i]] = static_cast<std::int8_t>(q.bits[i]);
}

RingElement TermEvaluator::value(const Assignment& y) const {
    if (y.size() != num_vars_) throw std::invalid_argument("assignment length must equal n");
    const RingParams p = params_;
    const std::uint64_t mask = p.mask();

    // Diagonal of vertex v: sum over active in-arcs of the arc value, minus
    // the perturbation bit. For an unweighted in-arc the value is constant 1.
    auto diagonal = [&](VertexId v) -> RingElement {
        std::uint64_t constant = q_of_[v] > 0 ? (0 - std::uint64_t{1}) & mask : 0;
        std::vector<std::uint64_t> coeffs;
        for (const InArc& a : in_arcs_[v]) {
            if (!y.get(a.tail)) continue;
            if (a.weight == 0) {
                constant = (constant + 1) & mask;
            } else {
                if (coeffs.size() <= a.weight && a.weight < p.trunc_len)
                    coeffs.resize(a.weight + 1, 0);
                if (a.weight < p.trunc_len) coeffs[a.weight] = (coeffs[a.weight] + 1) & mask;
            }
        }
        if (coeffs.empty()) return RingElement::monomial(p, 0, constant);
        coeffs[0] = constant;
        return RingElement::from_coeffs(p, std::move(coeffs));
    };

    // Rows of inactive vertices and of t are diagonal-only; split them off as
    // factors and keep the active core for the determinant.
    RingElement factor = RingElement::one(p);
    std::vector<VertexId> core_verts;
    for (VertexId v = 0; v < static_cast<VertexId>(in_arcs_.size()); ++v) {
        if (v == s_) continue;
        if (v != t_ && y.get(v)) {
            core_verts.push_back(v);
            continue;
        }
        factor = factor * diagonal(v);
        if (factor.is_zero()) break;
    }

    RingElement result = RingElement::zero(p);
    if (!factor.is_zero()) {
        const std::size_t dim = core_verts.size();
        RingMatrix core(dim, p);
        std::vector<std::size_t> core_index(in_arcs_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < dim; ++i) core_index[core_verts[i]] = i;
        for (std::size_t i = 0; i < dim; ++i) {
            const VertexId u = core_verts[i];
            core.at(i, i) = diagonal(u);
            for (const auto& [head, weight] : out_arcs_[u]) {
                if (core_index[head] == SIZE_MAX) continue;
                const RingElement z = weight == 0 ? RingElement::one(p)
                                                  : RingElement::monomial(p, weight, 1);
                core.at(i, core_index[head]) += -z;
            }
        }
        result = factor * det(core);
    }

    if ((num_vars_ - y.count()) % 2 != 0) result = -result;
    return result;
}

RingElement term_value(const SplitGraph& g, const SamplePoint& sp, const QVector& q,
                       const Assignment& y, RingParams p) {
    return TermEvaluator(g, sp, q, p).value(y);
}

}  // namespace hamsieve
