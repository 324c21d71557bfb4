// repchar.hpp
// -----------
// The Weyl-group representation carried by the flow-up basis: expansion
// matrices of the dot action, the fiber representation at alpha = 0,
// characters, and multiplicity decomposition.
//
// The fiber matrices are block diagonal with respect to the h-length
// grading: expansion coefficients are homogeneous of degree
// l_h(x) - l_h(y), so only same-level coefficients have constant terms.

#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gkmflow/ddops.hpp"

namespace gkmflow {

/// Expansion matrix of one dot action: row x holds the coefficients of
/// dot_action(sigma, P^x) in the flow-up basis.
struct ActionMatrix {
    int n = 0;
    std::vector<Polynomial> entries; // row-major [x*n + y]

    const Polynomial& at(int x, int y) const { return entries[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)]; }
};

inline ActionMatrix action_matrix(const WeylGroup& g, const FlowUpFamily& fam, int sigma) {
    ActionMatrix m;
    m.n = g.size();
    m.entries.reserve(static_cast<size_t>(m.n) * static_cast<size_t>(m.n));
    for (int x = 0; x < m.n; ++x) {
        auto coeffs = expand_in_basis(g, fam.h, dot_action(g, sigma, fam.at(x)), fam.classes);
        for (auto& c : coeffs) m.entries.push_back(std::move(c));
    }
    return m;
}

/// The fiber representation: for each sigma the rational matrix of constant
/// terms of the expansion coefficients, arranged so that
/// rho(sigma)[y][x] = ct(coefficient of P^y in sigma . P^x), which makes
/// rho a genuine homomorphism: rho(sigma tau) = rho(sigma) rho(tau).
class FiberRep {
public:
    FiberRep(const WeylGroup& g, std::vector<int> level_of)
        : n_(g.size()), level_of_(std::move(level_of)) {
        int max_level = 0;
        for (int l : level_of_) max_level = std::max(max_level, l);
        members_.resize(static_cast<size_t>(max_level) + 1);
        pos_in_level_.resize(static_cast<size_t>(n_));
        for (int w = 0; w < n_; ++w) {
            auto& mem = members_[static_cast<size_t>(level_of_[static_cast<size_t>(w)])];
            pos_in_level_[static_cast<size_t>(w)] = static_cast<int>(mem.size());
            mem.push_back(w);
        }
        blocks_.assign(static_cast<size_t>(n_), {});
    }

    int size() const { return n_; }
    int num_levels() const { return static_cast<int>(members_.size()); }
    int level_of(int w) const { return level_of_[static_cast<size_t>(w)]; }
    int pos_in_level(int w) const { return pos_in_level_[static_cast<size_t>(w)]; }
    const std::vector<std::vector<int>>& level_members() const { return members_; }

    Rational entry(int sigma, int y, int x) const {
        int l = level_of_[static_cast<size_t>(y)];
        if (l != level_of_[static_cast<size_t>(x)]) return Rational(0);
        const auto& b = blocks_[static_cast<size_t>(sigma)][static_cast<size_t>(l)];
        size_t dim = members_[static_cast<size_t>(l)].size();
        return b[static_cast<size_t>(pos_in_level_[static_cast<size_t>(y)]) * dim +
                 static_cast<size_t>(pos_in_level_[static_cast<size_t>(x)])];
    }

    Rational trace(int sigma) const {
        Rational t(0);
        for (size_t l = 0; l < members_.size(); ++l) {
            size_t dim = members_[l].size();
            const auto& b = blocks_[static_cast<size_t>(sigma)][l];
            for (size_t d = 0; d < dim; ++d) t += b[d * dim + d];
        }
        return t;
    }

    bool matrices_equal(int sigma, int tau) const { return blocks_[static_cast<size_t>(sigma)] == blocks_[static_cast<size_t>(tau)]; }

    /// Per-level blocks of sigma (dense, row-major within the level).
    const std::vector<std::vector<Rational>>& blocks(int sigma) const { return blocks_[static_cast<size_t>(sigma)]; }
    std::vector<std::vector<Rational>>& blocks(int sigma) { return blocks_[static_cast<size_t>(sigma)]; }

    std::vector<std::vector<Rational>> empty_blocks() const {
        std::vector<std::vector<Rational>> out(members_.size());
        for (size_t l = 0; l < members_.size(); ++l)
            out[l].assign(members_[l].size() * members_[l].size(), Rational(0));
        return out;
    }

    std::vector<std::vector<Rational>> multiply_blocks(const std::vector<std::vector<Rational>>& a,
                                                       const std::vector<std::vector<Rational>>& b) const {
        auto out = empty_blocks();
        for (size_t l = 0; l < members_.size(); ++l) {
            size_t dim = members_[l].size();
            for (size_t r = 0; r < dim; ++r)
                for (size_t m = 0; m < dim; ++m) {
                    const Rational& arm = a[l][r * dim + m];
                    if (arm == 0) continue;
                    for (size_t c = 0; c < dim; ++c) {
                        const Rational& bmc = b[l][m * dim + c];
                        if (bmc != 0) out[l][r * dim + c] += arm * bmc;
                    }
                }
        }
        return out;
    }

private:
    int n_;
    std::vector<int> level_of_;
    std::vector<std::vector<int>> members_;
    std::vector<int> pos_in_level_;
    std::vector<std::vector<std::vector<Rational>>> blocks_; // [sigma][level][dense]
};

namespace detail {

/// Fiber blocks of one sigma computed directly: expand every dot-acted basis
/// class exactly and take constant terms of the coefficients.
inline std::vector<std::vector<Rational>> fiber_blocks_direct(const WeylGroup& g, const FlowUpFamily& fam,
                                                              const FiberRep& shape, int sigma) {
    auto blocks = shape.empty_blocks();
    for (int x = 0; x < g.size(); ++x) {
        auto coeffs = expand_in_basis(g, fam.h, dot_action(g, sigma, fam.at(x)), fam.classes);
        int lx = shape.level_of(x);
        size_t dim = shape.level_members()[static_cast<size_t>(lx)].size();
        for (int y = 0; y < g.size(); ++y) {
            const Polynomial& f = coeffs[static_cast<size_t>(y)];
            if (f.is_zero()) continue;
            Rational ct = f.constant_term();
            if (ct == 0) continue;
            if (shape.level_of(y) != lx)
                throw Error("fiber coefficient crosses levels; expansion is not graded");
            size_t py = static_cast<size_t>(shape.pos_in_level(y));
            size_t px = static_cast<size_t>(shape.pos_in_level(x));
            blocks[static_cast<size_t>(lx)][py * dim + px] = ct;
        }
    }
    return blocks;
}

} // namespace detail

/// Computes the fiber representation. For small groups every matrix is
/// computed directly from exact expansions. For larger groups the generator
/// matrices are computed directly and the rest by exact products (rho is a
/// homomorphism); `verify_samples` elements are additionally recomputed
/// directly and compared, so the product route never goes unchecked.
inline FiberRep fiber_representation(const WeylGroup& g, const FlowUpFamily& fam,
                                     int direct_threshold = 24, int verify_samples = 3) {
    std::vector<int> level_of(static_cast<size_t>(g.size()));
    for (int w = 0; w < g.size(); ++w) level_of[static_cast<size_t>(w)] = hessenberg_length(g, w, fam.h);
    FiberRep rep(g, std::move(level_of));

    if (g.size() <= direct_threshold) {
        for (int sigma = 0; sigma < g.size(); ++sigma)
            rep.blocks(sigma) = detail::fiber_blocks_direct(g, fam, rep, sigma);
        return rep;
    }

    // Identity blocks.
    auto id_blocks = rep.empty_blocks();
    for (size_t l = 0; l < id_blocks.size(); ++l) {
        size_t dim = rep.level_members()[l].size();
        for (size_t d = 0; d < dim; ++d) id_blocks[l][d * dim + d] = 1;
    }
    rep.blocks(g.identity()) = id_blocks;
    for (int i = 0; i < g.rank(); ++i)
        rep.blocks(g.simple_reflection(i)) = detail::fiber_blocks_direct(g, fam, rep, g.simple_reflection(i));
    // rho(w s_i) = rho(w) rho(s_i): fill ascending by length along cached words.
    for (int w = 0; w < g.size(); ++w) {
        if (g.length(w) < 2) continue;
        const auto& word = g.element(w).word;
        int last = word.back();
        int prefix = g.multiply(w, g.simple_reflection(last));
        rep.blocks(w) = rep.multiply_blocks(rep.blocks(prefix), rep.blocks(g.simple_reflection(last)));
    }

    // Spot-check the product route against direct expansion.
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    std::vector<int> sample = {g.longest()};
    for (int s = 0; s < verify_samples; ++s) sample.push_back(pick(rng));
    for (int sigma : sample)
        if (!(detail::fiber_blocks_direct(g, fam, rep, sigma) == rep.blocks(sigma)))
            throw Error("fiber product route disagrees with direct expansion at " + g.name(sigma));
    return rep;
}

/// A class function given by its value on every element.
struct Character {
    std::vector<Rational> values;

    bool operator==(const Character&) const = default;
};

inline Character character_of(const WeylGroup& g, const FiberRep& rep) {
    Character chi;
    chi.values.reserve(static_cast<size_t>(g.size()));
    for (int sigma = 0; sigma < g.size(); ++sigma) chi.values.push_back(rep.trace(sigma));
    return chi;
}

/// Trace of the defining (simple-root basis) matrix of each element.
inline Character reflection_character(const WeylGroup& g) {
    Character chi;
    chi.values.reserve(static_cast<size_t>(g.size()));
    int k = g.rank();
    for (int w = 0; w < g.size(); ++w) {
        const auto& m = g.element(w).matrix;
        long long t = 0;
        for (int j = 0; j < k; ++j) t += m[static_cast<size_t>(j * k + j)];
        chi.values.push_back(Rational(static_cast<long>(t)));
    }
    return chi;
}

inline Character trivial_character(const WeylGroup& g) {
    Character chi;
    chi.values.assign(static_cast<size_t>(g.size()), Rational(1));
    return chi;
}

/// Standard inner product <chi, psi> = |W|^{-1} sum_w chi(w) psi(w) of real
/// characters.
inline Rational character_inner_product(const WeylGroup& g, const Character& a, const Character& b) {
    Rational s(0);
    for (int w = 0; w < g.size(); ++w) s += a.values[static_cast<size_t>(w)] * b.values[static_cast<size_t>(w)];
    return s / Rational(g.size());
}

/// Multiplicities <chi, chi_i> against a list of (irreducible, real)
/// characters. When `require_integral` is set, a non-integer multiplicity
/// throws NonIntegralMultiplicityError.
inline std::vector<Rational> decompose(const WeylGroup& g, const Character& chi,
                                       const std::vector<Character>& irreducibles,
                                       bool require_integral = false) {
    std::vector<Rational> out;
    for (const auto& irr : irreducibles) {
        Rational m = character_inner_product(g, chi, irr);
        if (require_integral && m.get_den() != 1)
            throw NonIntegralMultiplicityError("non-integral multiplicity " + m.get_str());
        out.push_back(m);
    }
    return out;
}

/// Conjugacy classes by brute force (reporting only); returns one canonical
/// representative per class, ascending.
inline std::vector<std::vector<int>> conjugacy_classes(const WeylGroup& g) {
    std::vector<char> seen(static_cast<size_t>(g.size()), 0);
    std::vector<std::vector<int>> classes;
    for (int w = 0; w < g.size(); ++w) {
        if (seen[static_cast<size_t>(w)]) continue;
        std::vector<int> cls;
        for (int s = 0; s < g.size(); ++s) {
            int c = g.multiply(g.multiply(s, w), g.inverse(s));
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

/// Outcome of the representation-multiplicity verification.
struct ConfirmReport {
    bool pass = false;
    long m_v_fiber = -1, m_r_fiber = -1;   // computed from the fiber character
    long m_v_expected = -1, m_r_expected = -1; // |W|/|Phi| and |W| - |Delta| m_V
    bool character_matches = false; // chi_fiber == m_V chi_V + m_R 1 pointwise
    // Type A_{n-1} only: the closed factorial forms (n-2)! and (n-1)!(n-1).
    std::optional<long> m_v_type_a, m_r_type_a;
    std::string detail;
};

/// Computes the fiber multiplicities and compares them with the expected
/// m_V = |W|/|Phi|, m_R = |W| - |Delta| m_V (simply-laced types only).
inline ConfirmReport verify_confirm(const WeylGroup& g, const FlowUpFamily& fam) {
    const RootSystem& rs = g.root_system();
    if (!rs.simply_laced())
        throw UnsupportedTypeError("representation verification applies to simply-laced types only");
    ConfirmReport rep;
    FiberRep rho = fiber_representation(g, fam);
    Character chi = character_of(g, rho);
    Character chi_v = reflection_character(g);
    Character triv = trivial_character(g);
    auto mult = decompose(g, chi, {chi_v, triv}, /*require_integral=*/true);
    rep.m_v_fiber = mult[0].get_num().get_si();
    rep.m_r_fiber = mult[1].get_num().get_si();
    rep.m_v_expected = g.size() / rs.num_roots();
    rep.m_r_expected = g.size() - rs.rank() * rep.m_v_expected;

    Character recombined;
    recombined.values.reserve(static_cast<size_t>(g.size()));
    for (int w = 0; w < g.size(); ++w)
        recombined.values.push_back(mult[0] * chi_v.values[static_cast<size_t>(w)] + mult[1]);
    rep.character_matches = (recombined == chi);

    rep.pass = rep.character_matches && rep.m_v_fiber == rep.m_v_expected && rep.m_r_fiber == rep.m_r_expected &&
               rep.m_v_fiber >= 0 && rep.m_r_fiber >= 0;

    if (rs.cartan_type().family == Family::A) {
        long n = rs.rank() + 1; // W = S_n
        auto factorial = [](long v) {
            long f = 1;
            for (long i = 2; i <= v; ++i) f *= i;
            return f;
        };
        rep.m_v_type_a = factorial(n - 2);
        rep.m_r_type_a = factorial(n - 1) * (n - 1);
        rep.pass = rep.pass && rep.m_v_fiber == *rep.m_v_type_a && rep.m_r_fiber == *rep.m_r_type_a;
    }
    if (!rep.pass)
        rep.detail = "fiber (" + std::to_string(rep.m_v_fiber) + "," + std::to_string(rep.m_r_fiber) +
                     ") vs expected (" + std::to_string(rep.m_v_expected) + "," + std::to_string(rep.m_r_expected) + ")";
    return rep;
}

} // namespace gkmflow
