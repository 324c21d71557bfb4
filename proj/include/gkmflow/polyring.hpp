// polyring.hpp
// ------------
// Exact multivariate polynomials with rational coefficients in the
// simple-root variables a1..ak. No floating point anywhere.
//
// Representation: terms sorted by a packed monomial key in graded-lex
// descending order (degree first, then a1 most significant). The packed key
// holds the total degree and up to six exponents in 9-bit fields, so plain
// uint64 comparison realizes the monomial order.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gkmflow/errors.hpp"
#include "gkmflow/rootsystem.hpp"

namespace gkmflow {

using Rational = mpq_class;

using MonoKey = std::uint64_t;

namespace detail {

constexpr int kMonoBits = 9;
constexpr int kMonoMaxVars = 6;
constexpr std::uint64_t kMonoMask = (1u << kMonoBits) - 1;

inline int mono_shift(int var) { return kMonoBits * (kMonoMaxVars - 1 - var); }

inline MonoKey mono_pack(const std::vector<int>& exps) {
    std::uint64_t deg = 0;
    std::uint64_t key = 0;
    for (size_t j = 0; j < exps.size(); ++j) {
        std::uint64_t e = static_cast<std::uint64_t>(exps[j]);
        if (exps[j] < 0 || e > kMonoMask)
            throw Error("monomial exponent out of range");
        deg += e;
        key |= e << mono_shift(static_cast<int>(j));
    }
    if (deg > kMonoMask) throw Error("monomial degree out of range");
    return (deg << (kMonoBits * kMonoMaxVars)) | key;
}

inline int mono_exponent(MonoKey k, int var) {
    return static_cast<int>((k >> mono_shift(var)) & kMonoMask);
}

inline int mono_degree(MonoKey k) {
    return static_cast<int>((k >> (kMonoBits * kMonoMaxVars)) & kMonoMask);
}

// Product of monomials = sum of exponent fields; fields are wide enough that
// desk-scale degrees never carry between fields.
inline MonoKey mono_mul(MonoKey a, MonoKey b) { return a + b; }

} // namespace detail

class Polynomial {
public:
    using Term = std::pair<MonoKey, Rational>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, Rational c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_.emplace_back(0, std::move(c));
        return p;
    }

    static Polynomial variable(int nvars, int j, Rational c = 1) {
        Polynomial p(nvars);
        if (c != 0) {
            std::vector<int> e(static_cast<size_t>(nvars), 0);
            e[static_cast<size_t>(j)] = 1;
            p.terms_.emplace_back(detail::mono_pack(e), std::move(c));
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Total degree (max over terms); nullopt for the zero polynomial.
    std::optional<int> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return detail::mono_degree(terms_.front().first);
    }

    /// True for the zero polynomial (homogeneous of every degree).
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = detail::mono_degree(terms_.front().first);
        return detail::mono_degree(terms_.back().first) == d;
    }

    /// Common total degree if every term shares it; nullopt if inhomogeneous
    /// or zero (callers distinguish the zero case via is_zero()).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = detail::mono_degree(terms_.front().first);
        if (detail::mono_degree(terms_.back().first) != d) return std::nullopt;
        return d;
    }

    Rational constant_term() const {
        if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
        return Rational(0);
    }

    Polynomial operator-() const {
        Polynomial out(nvars_);
        out.terms_.reserve(terms_.size());
        for (const auto& [k, c] : terms_) out.terms_.emplace_back(k, -c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial out(a.nvars_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            if (a.terms_[i].first > b.terms_[j].first)
                out.terms_.push_back(a.terms_[i++]);
            else if (a.terms_[i].first < b.terms_[j].first)
                out.terms_.push_back(b.terms_[j++]);
            else {
                Rational c = a.terms_[i].second + b.terms_[j].second;
                if (c != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        while (i < a.terms_.size()) out.terms_.push_back(a.terms_[i++]);
        while (j < b.terms_.size()) out.terms_.push_back(b.terms_[j++]);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial out(a.nvars_);
        if (a.is_zero() || b.is_zero()) return out;
        // Accumulate into a key-sorted vector: products mostly hit existing
        // monomials, so the hot path is a binary search plus an in-place add
        // with one reused scratch rational.
        auto& acc = out.terms_;
        acc.reserve(a.terms_.size() + b.terms_.size());
        mpq_class scratch;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                MonoKey k = detail::mono_mul(ka, kb);
                auto it = std::lower_bound(acc.begin(), acc.end(), k,
                                           [](const Term& t, MonoKey key) { return t.first > key; });
                mpq_mul(scratch.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                if (it != acc.end() && it->first == k)
                    mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), scratch.get_mpq_t());
                else
                    acc.emplace(it, k, scratch);
            }
        std::erase_if(acc, [](const Term& t) { return t.second == 0; });
        return out;
    }

    /// In-place this += (negate ? -1 : +1) * a * b, without temporaries.
    void fused_addmul(const Polynomial& a, const Polynomial& b, bool negate) {
        check_same(a);
        a.check_same(b);
        mpq_class scratch;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                MonoKey k = detail::mono_mul(ka, kb);
                auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                           [](const Term& t, MonoKey key) { return t.first > key; });
                mpq_mul(scratch.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                if (negate) mpq_neg(scratch.get_mpq_t(), scratch.get_mpq_t());
                if (it != terms_.end() && it->first == k)
                    mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), scratch.get_mpq_t());
                else
                    terms_.emplace(it, k, scratch);
            }
        std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial out(a.nvars_);
        if (c == 0) return out;
        out.terms_.reserve(a.terms_.size());
        for (const auto& [k, v] : a.terms_) out.terms_.emplace_back(k, v * c);
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    /// Substitutes images[j] for variable j; images live in out_nvars
    /// variables. Ring homomorphism.
    Polynomial substitute(const std::vector<Polynomial>& images, int out_nvars) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw Error("substitute: wrong number of images");
        // Cache powers of each image up to the max exponent in use.
        std::vector<int> maxe(static_cast<size_t>(nvars_), 0);
        for (const auto& [k, c] : terms_)
            for (int j = 0; j < nvars_; ++j)
                maxe[static_cast<size_t>(j)] = std::max(maxe[static_cast<size_t>(j)], detail::mono_exponent(k, j));
        std::vector<std::vector<Polynomial>> pow(static_cast<size_t>(nvars_));
        for (int j = 0; j < nvars_; ++j) {
            auto& pj = pow[static_cast<size_t>(j)];
            pj.push_back(Polynomial::constant(out_nvars, 1));
            for (int e = 1; e <= maxe[static_cast<size_t>(j)]; ++e)
                pj.push_back(pj.back() * images[static_cast<size_t>(j)]);
        }
        Polynomial out(out_nvars);
        for (const auto& [k, c] : terms_) {
            Polynomial t = Polynomial::constant(out_nvars, c);
            for (int j = 0; j < nvars_; ++j) {
                int e = detail::mono_exponent(k, j);
                if (e > 0) t = t * pow[static_cast<size_t>(j)][static_cast<size_t>(e)];
            }
            out += t;
        }
        return out;
    }

    /// Canonical rendering: graded-lex descending, coefficients `p` or `p/q`,
    /// unit coefficients and exponents omitted, e.g. "a1^2 - 2*a1*a2 + a2^2".
    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational a = abs(c);
            bool neg = c < 0;
            std::string mono;
            for (int j = 0; j < nvars_; ++j) {
                int e = detail::mono_exponent(k, j);
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[static_cast<size_t>(j)];
                if (e > 1) mono += "^" + std::to_string(e);
            }
            std::string coeff;
            if (mono.empty())
                coeff = a.get_str();
            else if (a != 1)
                coeff = a.get_str() + "*";
            if (first) {
                s += neg ? "-" : "";
                first = false;
            } else {
                s += neg ? " - " : " + ";
            }
            s += coeff + mono;
        }
        return s;
    }

    /// Default variable names a1..ak.
    std::string to_string() const { return to_string(default_names(nvars_)); }

    static std::vector<std::string> default_names(int nvars) {
        std::vector<std::string> names;
        for (int j = 1; j <= nvars; ++j) names.push_back("a" + std::to_string(j));
        return names;
    }

    /// Builds a polynomial directly from (exponent-vector, coefficient) pairs.
    static Polynomial from_terms(int nvars, const std::vector<std::pair<std::vector<int>, Rational>>& raw) {
        Polynomial out(nvars);
        for (const auto& [e, c] : raw) {
            Polynomial t(nvars);
            if (c != 0) t.terms_.emplace_back(detail::mono_pack(e), c);
            out += t;
        }
        return out;
    }

private:
    int nvars_ = 0;
    std::vector<Term> terms_; // sorted by key, descending; no zero coefficients

    static void check_nvars(int n) {
        if (n < 0 || n > detail::kMonoMaxVars)
            throw Error("unsupported variable count " + std::to_string(n));
    }

    void check_same(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw Error("polynomial variable counts differ");
    }
};

/// The root r as a degree-1 polynomial sum_i coords[i] * a_i.
inline Polynomial linear_form(const Root& r) {
    int n = static_cast<int>(r.coords.size());
    Polynomial p(n);
    for (int j = 0; j < n; ++j)
        if (r.coords[static_cast<size_t>(j)] != 0)
            p += Polynomial::variable(n, j, Rational(r.coords[static_cast<size_t>(j)]));
    return p;
}

/// Exact division of p by a nonzero linear form l: returns q with p = q*l, or
/// nullopt when l does not divide p. Synthetic division on the pivot variable
/// (the least index with a nonzero coefficient in l), remainder checked by
/// re-expansion.
inline std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& l) {
    if (p.nvars() != l.nvars()) throw Error("divide_exact: variable counts differ");
    if (l.is_zero() || l.homogeneous_degree() != std::optional<int>(1))
        throw Error("divide_exact: divisor must be a nonzero linear form");
    int n = p.nvars();
    if (p.is_zero()) return Polynomial::zero(n);

    int pivot = -1;
    Rational cj;
    for (int j = 0; j < n && pivot < 0; ++j)
        for (const auto& [k, c] : l.terms())
            if (detail::mono_exponent(k, j) == 1) {
                pivot = j;
                cj = c;
                break;
            }

    // m = l - cj * a_pivot (the part of l free of the pivot variable).
    Polynomial m = l - Polynomial::variable(n, pivot, cj);

    // Split p by pivot exponent: p = sum_d p_d * a_pivot^d with p_d pivot-free.
    int dmax = 0;
    for (const auto& [k, c] : p.terms())
        dmax = std::max(dmax, detail::mono_exponent(k, pivot));
    if (dmax == 0) return std::nullopt; // nonzero, pivot-free: not a multiple of l
    std::vector<Polynomial> parts(static_cast<size_t>(dmax) + 1, Polynomial::zero(n));
    for (const auto& [k, c] : p.terms()) {
        int d = detail::mono_exponent(k, pivot);
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) e[static_cast<size_t>(j)] = detail::mono_exponent(k, j);
        e[static_cast<size_t>(pivot)] = 0;
        parts[static_cast<size_t>(d)] += Polynomial::from_terms(n, {{e, c}});
    }

    // Top-down synthetic division: q_{d-1} = (p_d - q_d * m) / cj, with
    // q_dmax = 0; remainder = p_0 - q_0 * m must vanish.
    Rational inv_cj = Rational(1) / cj;
    std::vector<Polynomial> q(static_cast<size_t>(dmax), Polynomial::zero(n));
    Polynomial carry = Polynomial::zero(n); // q_d * m for the step below
    for (int d = dmax; d >= 1; --d) {
        Polynomial qd = (parts[static_cast<size_t>(d)] - carry) * inv_cj;
        q[static_cast<size_t>(d) - 1] = qd;
        carry = qd * m;
    }
    if (!(parts[0] - carry).is_zero()) return std::nullopt;

    Polynomial quotient = Polynomial::zero(n);
    for (int d = 0; d < dmax; ++d) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(pivot)] = d;
        quotient += q[static_cast<size_t>(d)] * Polynomial::from_terms(n, {{e, Rational(1)}});
    }
    if (!(quotient * l - p).is_zero())
        throw Error("divide_exact: re-multiplication check failed");
    return quotient;
}

/// True iff p lies in the principal ideal generated by the root's linear form.
inline bool in_ideal(const Polynomial& p, const Root& r) {
    return divide_exact(p, linear_form(r)).has_value();
}

/// Exact division by a product of roots (divides by each linear form in turn).
inline std::optional<Polynomial> divide_exact_by_roots(const Polynomial& p,
                                                       const RootSystem& rs,
                                                       const std::vector<int>& root_ids) {
    Polynomial cur = p;
    for (int id : root_ids) {
        auto q = divide_exact(cur, linear_form(rs.root(id)));
        if (!q) return std::nullopt;
        cur = *q;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Parsing of the canonical string format (used by the JSON round-trip).

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && s[i] == ' ') ++i;
}

} // namespace detail

/// Parses the canonical polynomial format produced by to_string(names).
inline Polynomial parse_polynomial(const std::string& s, const std::vector<std::string>& names) {
    int n = static_cast<int>(names.size());
    Polynomial out(n);
    size_t i = 0;
    detail::skip_ws(s, i);
    if (i >= s.size()) throw Error("parse_polynomial: empty input");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        detail::skip_ws(s, i);
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                throw Error("parse_polynomial: expected sign in '" + s + "'");
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            detail::skip_ws(s, i);
        }
        first = false;
        // coefficient (optional when a variable follows)
        Rational coeff(1);
        bool have_coeff = false;
        size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        if (i > start) {
            coeff = Rational(s.substr(start, i - start));
            coeff.canonicalize();
            have_coeff = true;
        }
        std::vector<int> exps(static_cast<size_t>(n), 0);
        bool have_var = false;
        while (true) {
            detail::skip_ws(s, i);
            size_t save = i;
            if ((have_coeff || have_var) && i < s.size() && s[i] == '*') {
                ++i;
                detail::skip_ws(s, i);
            } else if (have_coeff || have_var) {
                break; // end of factor chain
            }
            int var = -1;
            for (int j = 0; j < n; ++j) {
                const std::string& nm = names[static_cast<size_t>(j)];
                if (s.compare(i, nm.size(), nm) == 0) {
                    var = j;
                    i += nm.size();
                    break;
                }
            }
            if (var < 0) {
                i = save;
                break;
            }
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t es = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es) throw Error("parse_polynomial: bad exponent in '" + s + "'");
                e = std::stoi(s.substr(es, i - es));
            }
            exps[static_cast<size_t>(var)] += e;
            have_var = true;
        }
        if (!have_coeff && !have_var)
            throw Error("parse_polynomial: malformed term in '" + s + "'");
        out += Polynomial::from_terms(n, {{exps, coeff * sign}});
        detail::skip_ws(s, i);
    }
    return out;
}

} // namespace gkmflow
