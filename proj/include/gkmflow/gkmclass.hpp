// gkmclass.hpp
// ------------
// Elements of the GKM ring: total polynomial assignments on the Weyl group,
// the GKM-condition checker, the dot action, flow-up verification, grading,
// and expansion in a flow-up basis.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gkmflow/polyring.hpp"
#include "gkmflow/weyl.hpp"

namespace gkmflow {

/// A total assignment from group elements to polynomials (zero allowed).
/// Membership in the GKM ring is a checkable predicate (check_gkm), not a
/// construction-time guarantee.
struct CohomologyClass {
    std::vector<Polynomial> values; // indexed by canonical element order

    CohomologyClass() = default;
    CohomologyClass(int num_elements, int nvars)
        : values(static_cast<size_t>(num_elements), Polynomial::zero(nvars)) {}

    const Polynomial& at(int w) const { return values[static_cast<size_t>(w)]; }
    Polynomial& at(int w) { return values[static_cast<size_t>(w)]; }

    bool is_zero() const {
        return std::all_of(values.begin(), values.end(), [](const Polynomial& p) { return p.is_zero(); });
    }

    bool operator==(const CohomologyClass& o) const { return values == o.values; }

    friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
        CohomologyClass out = a;
        for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
        return out;
    }
    friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
        CohomologyClass out = a;
        for (size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
        return out;
    }
    /// Pointwise product (the ring multiplication of Maps(W, R[Delta])).
    friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
        CohomologyClass out = a;
        for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = out.values[i] * b.values[i];
        return out;
    }
    /// Scalar multiplication by a global polynomial (the R[Delta]-module action).
    friend CohomologyClass operator*(const Polynomial& f, const CohomologyClass& c) {
        CohomologyClass out = c;
        for (auto& v : out.values) v = f * v;
        return out;
    }
};

struct GkmViolation {
    LabeledGraph::Edge edge;
    Polynomial difference;
};

/// Checks every (undirected) edge of the Hessenberg graph once: the values at
/// its endpoints must differ by a multiple of the edge root. Violations are
/// data, not errors.
inline std::vector<GkmViolation> check_gkm(const WeylGroup& g, const LabeledGraph& graph,
                                           const CohomologyClass& c) {
    std::vector<GkmViolation> out;
    for (const auto& e : graph.edges) {
        Polynomial diff = c.at(e.target) - c.at(e.source);
        if (diff.is_zero()) continue;
        if (!in_ideal(diff, g.root_system().root(e.root))) out.push_back({e, diff});
    }
    return out;
}

inline std::vector<GkmViolation> check_gkm(const WeylGroup& g, const HessenbergSet& h,
                                           const CohomologyClass& c) {
    return check_gkm(g, hessenberg_graph(g, h), c);
}

/// The dot action (w . P)(u) = w(P(w^{-1} u)); preserves GKM membership.
inline CohomologyClass dot_action(const WeylGroup& g, int w, const CohomologyClass& c) {
    CohomologyClass out(g.size(), g.rank());
    int winv = g.inverse(w);
    for (int u = 0; u < g.size(); ++u) {
        const Polynomial& src = c.at(g.multiply(winv, u));
        if (!src.is_zero()) out.at(u) = act(g, w, src);
    }
    return out;
}

/// Common total degree of the nonzero values, if one exists; nullopt when the
/// degrees are mixed, a value is inhomogeneous, or the class is zero (callers
/// distinguish the zero class via c.is_zero()).
inline std::optional<int> class_degree(const CohomologyClass& c) {
    std::optional<int> deg;
    for (const auto& p : c.values) {
        if (p.is_zero()) continue;
        auto d = p.homogeneous_degree();
        if (!d) return std::nullopt;
        if (deg && *deg != *d) return std::nullopt;
        deg = d;
    }
    return deg;
}

/// Product of the linear forms of the given positive roots (empty = 1).
inline Polynomial root_product(const RootSystem& rs, const std::vector<int>& root_ids) {
    Polynomial p = Polynomial::constant(rs.rank(), 1);
    for (int id : root_ids) p = p * linear_form(rs.root(id));
    return p;
}

/// Flow-up class test at x: homogeneous of degree l_h(x), value at x equal to
/// the product of the roots labeling the edges into x, support inside the
/// flow-up of x, and all GKM conditions.
inline bool is_flow_up(const WeylGroup& g, const HessenbergSet& h, const LabeledGraph& graph,
                       const CohomologyClass& c, int x) {
    auto nh = h_inversions(g, x, h);
    if (c.at(x) != root_product(g.root_system(), nh)) return false;
    auto deg = class_degree(c);
    if (!deg || *deg != static_cast<int>(nh.size())) return false;
    for (int y = 0; y < g.size(); ++y)
        if (!c.at(y).is_zero() && !flow_up_leq(graph, x, y)) return false;
    return check_gkm(g, graph, c).empty();
}

inline bool is_flow_up(const WeylGroup& g, const HessenbergSet& h, const CohomologyClass& c, int x) {
    return is_flow_up(g, h, hessenberg_graph(g, h), c, x);
}

/// Expansion order: (l_h, canonical index) ascending. Any linear extension of
/// the flow-up preorder gives the same coefficients; this one is the frozen
/// default.
inline std::vector<int> expansion_order(const WeylGroup& g, const HessenbergSet& h) {
    std::vector<int> order(static_cast<size_t>(g.size()));
    std::vector<int> hlen(static_cast<size_t>(g.size()));
    for (int w = 0; w < g.size(); ++w) {
        order[static_cast<size_t>(w)] = w;
        hlen[static_cast<size_t>(w)] = hessenberg_length(g, w, h);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return hlen[static_cast<size_t>(a)] < hlen[static_cast<size_t>(b)];
    });
    return order;
}

/// Expands target in a full flow-up family by triangular elimination:
/// f_x = residue(x) / P^x(x) (division must be exact), residue updated, final
/// residue identically zero. Throws NotInSpanError otherwise.
/// `order` must be a linear extension of the flow-up preorder; defaults to
/// expansion_order(g, h).
inline std::vector<Polynomial> expand_in_basis(const WeylGroup& g, const HessenbergSet& h,
                                               const CohomologyClass& target,
                                               const std::vector<CohomologyClass>& basis,
                                               const std::vector<int>* order_override = nullptr) {
    const RootSystem& rs = g.root_system();
    int n = g.size();
    std::vector<int> order;
    if (order_override)
        order = *order_override;
    else
        order = expansion_order(g, h);

    std::vector<Polynomial> coeffs(static_cast<size_t>(n), Polynomial::zero(rs.rank()));
    CohomologyClass residue = target;
    for (int x : order) {
        const Polynomial& r = residue.at(x);
        if (r.is_zero()) continue;
        auto q = divide_exact_by_roots(r, rs, h_inversions(g, x, h));
        if (!q)
            throw NotInSpanError("expansion residue at " + g.name(x) + " is not divisible by the leading value");
        coeffs[static_cast<size_t>(x)] = *q;
        const CohomologyClass& bx = basis[static_cast<size_t>(x)];
        residue.at(x) = Polynomial::zero(rs.rank()); // f_x * P^x(x) by construction
        for (int y = 0; y < n; ++y)
            if (y != x && !bx.at(y).is_zero()) residue.at(y).fused_addmul(*q, bx.at(y), /*negate=*/true);
    }
    if (!residue.is_zero())
        throw NotInSpanError("nonzero residue after triangular elimination");
    return coeffs;
}

/// Recombines coefficients against a family: sum_x coeffs[x] * basis[x].
inline CohomologyClass combine(const WeylGroup& g, const std::vector<CohomologyClass>& basis,
                               const std::vector<Polynomial>& coeffs) {
    CohomologyClass out(g.size(), g.rank());
    for (int x = 0; x < g.size(); ++x) {
        if (coeffs[static_cast<size_t>(x)].is_zero()) continue;
        for (int y = 0; y < g.size(); ++y)
            if (!basis[static_cast<size_t>(x)].at(y).is_zero())
                out.at(y) += coeffs[static_cast<size_t>(x)] * basis[static_cast<size_t>(x)].at(y);
    }
    return out;
}

} // namespace gkmflow
