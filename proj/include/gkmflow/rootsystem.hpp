// rootsystem.hpp
// --------------
// Finite crystallographic root systems built from a Cartan type: the
// symmetrized bilinear form, reflections, dominance order, highest root,
// and Hessenberg-set validation.
//
// Conventions (frozen, see README):
//   - Roots are integer coordinate vectors in the simple-root basis.
//   - cartan_matrix[i][j] = c_{alpha_i alpha_j} = 2(alpha_i,alpha_j)/(alpha_i,alpha_i),
//     so s_i(alpha_j) = alpha_j - cartan_matrix[i][j] * alpha_i.
//   - The form is realized as b_{ij} = d_i * C[i][j] with d the minimal
//     positive symmetrizers; no ambient Euclidean embedding anywhere.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gkmflow/errors.hpp"

namespace gkmflow {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct CartanType {
    Family family;
    int rank;

    bool operator==(const CartanType&) const = default;

    /// Supported instances: A1..A5, B2, C2, G2, D4.
    bool supported() const {
        switch (family) {
        case Family::A: return rank >= 1 && rank <= 5;
        case Family::B: return rank == 2;
        case Family::C: return rank == 2;
        case Family::D: return rank == 4;
        case Family::G: return rank == 2;
        }
        return false;
    }

    std::string to_string() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    /// Parses names like "A2", "d4", "G2".
    static CartanType parse(const std::string& name) {
        if (name.size() < 2)
            throw UnsupportedTypeError("unrecognized Cartan type '" + name + "'");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'G')
            throw UnsupportedTypeError("unrecognized Cartan family '" + name + "'");
        int rank = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw UnsupportedTypeError("unrecognized Cartan type '" + name + "'");
            rank = rank * 10 + (name[i] - '0');
        }
        CartanType t{static_cast<Family>(f), rank};
        if (!t.supported())
            throw UnsupportedTypeError("unsupported Cartan type '" + t.to_string() +
                                       "' (supported: A1..A5, B2, C2, G2, D4)");
        return t;
    }
};

/// A root: coordinates in the simple-root basis. All coordinates of a root
/// are >= 0 (positive root) or <= 0 (negative root), never mixed.
struct Root {
    std::vector<int> coords;

    Root() = default;
    explicit Root(std::vector<int> c) : coords(std::move(c)) {}

    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;

    Root operator-() const {
        Root r(coords);
        for (int& c : r.coords) c = -c;
        return r;
    }

    int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

    bool is_positive() const {
        bool any = false;
        for (int c : coords) {
            if (c < 0) return false;
            if (c > 0) any = true;
        }
        return any;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

class RootSystem {
public:
    /// Builds the root system of a supported Cartan type by closing the
    /// simple roots under all simple reflections.
    explicit RootSystem(CartanType t) : type_(t), rank_(t.rank) {
        if (!t.supported())
            throw UnsupportedTypeError("unsupported Cartan type '" + t.to_string() + "'");
        cartan_ = cartan_matrix_for(t);
        symmetrizers_ = symmetrizers_for(cartan_);
        generate_roots();
    }

    const CartanType& cartan_type() const { return type_; }
    int rank() const { return rank_; }

    /// cartan_matrix()[i][j] = c_{alpha_i alpha_j}.
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const std::vector<int>& symmetrizers() const { return symmetrizers_; }

    /// All roots: positives first (sorted by height then lex), then their
    /// negatives in the mirrored order.
    const std::vector<Root>& roots() const { return roots_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_positive_; }

    const Root& root(int id) const { return roots_[static_cast<size_t>(id)]; }
    bool id_is_positive(int id) const { return id < num_positive_; }
    int negate(int id) const { return id < num_positive_ ? id + num_positive_ : id - num_positive_; }

    int simple_root_id(int i) const { return simple_ids_[static_cast<size_t>(i)]; }
    const Root& simple_root(int i) const { return roots_[static_cast<size_t>(simple_ids_[static_cast<size_t>(i)])]; }

    std::optional<int> find_root(const Root& r) const {
        auto it = index_.find(r.coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int require_root(const Root& r) const {
        auto id = find_root(r);
        if (!id) throw NotARootError("not a root: " + r.to_string());
        return *id;
    }

    /// Symmetrized bilinear form (a, b), exact up to one global positive scale
    /// (which cancels in every Cartan integer).
    long long bilinear(const Root& a, const Root& b) const {
        long long s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                s += static_cast<long long>(a.coords[static_cast<size_t>(i)]) *
                     symmetrizers_[static_cast<size_t>(i)] * cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                     b.coords[static_cast<size_t>(j)];
        return s;
    }

    const Root& highest_root() const { return roots_[static_cast<size_t>(highest_id_)]; }
    int highest_root_id() const { return highest_id_; }

    bool simply_laced() const {
        long long n0 = bilinear(roots_[0], roots_[0]);
        for (int i = 0; i < num_positive_; ++i)
            if (bilinear(roots_[static_cast<size_t>(i)], roots_[static_cast<size_t>(i)]) != n0) return false;
        return true;
    }

private:
    CartanType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> symmetrizers_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> simple_ids_;
    int num_positive_ = 0;
    int highest_id_ = -1;

    static std::vector<std::vector<int>> cartan_matrix_for(CartanType t) {
        int n = t.rank;
        std::vector<std::vector<int>> c(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) {
                c[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
                c[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
            }
            break;
        case Family::B: // alpha_1 long, alpha_2 short
            c[0][1] = -1;
            c[1][0] = -2;
            break;
        case Family::C: // alpha_1 short, alpha_2 long
            c[0][1] = -2;
            c[1][0] = -1;
            break;
        case Family::G: // alpha_1 long, alpha_2 short
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        case Family::D: // alpha_2 is the central node
            for (int outer : {0, 2, 3}) {
                c[static_cast<size_t>(outer)][1] = -1;
                c[1][static_cast<size_t>(outer)] = -1;
            }
            break;
        }
        return c;
    }

    // Minimal positive integers d with d_i C[i][j] symmetric.
    static std::vector<int> symmetrizers_for(const std::vector<std::vector<int>>& c) {
        int n = static_cast<int>(c.size());
        std::vector<int> d(static_cast<size_t>(n), 0);
        d[0] = 1;
        // Propagate along the Dynkin graph: d_i C[i][j] = d_j C[j][i].
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j || c[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
                    if (d[static_cast<size_t>(i)] != 0 && d[static_cast<size_t>(j)] == 0) {
                        // d_j = d_i C[i][j] / C[j][i]; keep integrality by scaling.
                        int num = d[static_cast<size_t>(i)] * c[static_cast<size_t>(i)][static_cast<size_t>(j)];
                        int den = c[static_cast<size_t>(j)][static_cast<size_t>(i)];
                        if (num % den != 0) {
                            int g = std::gcd(std::abs(num), std::abs(den));
                            int scale = std::abs(den) / g;
                            for (int& v : d) v *= scale;
                            num = d[static_cast<size_t>(i)] * c[static_cast<size_t>(i)][static_cast<size_t>(j)];
                        }
                        d[static_cast<size_t>(j)] = num / den;
                        changed = true;
                    }
                }
        }
        for (int& v : d)
            if (v == 0) v = 1; // isolated node (rank 1)
        int g = 0;
        for (int v : d) g = std::gcd(g, v);
        for (int& v : d) v /= g;
        return d;
    }

    // Simple reflection on an arbitrary coordinate vector: s_i(v) = v - (Cv)_i alpha_i.
    std::vector<int> simple_reflect(int i, const std::vector<int>& v) const {
        long long cv = 0;
        for (int j = 0; j < rank_; ++j)
            cv += static_cast<long long>(cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]) * v[static_cast<size_t>(j)];
        std::vector<int> out = v;
        out[static_cast<size_t>(i)] -= static_cast<int>(cv);
        return out;
    }

    void generate_roots() {
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> frontier;
        for (int i = 0; i < rank_; ++i) {
            std::vector<int> e(static_cast<size_t>(rank_), 0);
            e[static_cast<size_t>(i)] = 1;
            seen.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& v : frontier)
                for (int i = 0; i < rank_; ++i) {
                    auto w = simple_reflect(i, v);
                    if (seen.insert(w).second) next.push_back(w);
                }
            frontier = std::move(next);
        }
        std::vector<Root> pos;
        for (const auto& v : seen) {
            Root r(v);
            if (r.is_positive()) pos.push_back(r);
        }
        std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
            if (a.height() != b.height()) return a.height() < b.height();
            return a.coords < b.coords;
        });
        num_positive_ = static_cast<int>(pos.size());
        roots_ = pos;
        for (const auto& r : pos) roots_.push_back(-r);
        for (int id = 0; id < static_cast<int>(roots_.size()); ++id)
            index_[roots_[static_cast<size_t>(id)].coords] = id;

        simple_ids_.resize(static_cast<size_t>(rank_));
        for (int i = 0; i < rank_; ++i) {
            std::vector<int> e(static_cast<size_t>(rank_), 0);
            e[static_cast<size_t>(i)] = 1;
            simple_ids_[static_cast<size_t>(i)] = index_.at(e);
        }

        // Highest root: the unique dominance-maximal positive root.
        highest_id_ = 0;
        for (int id = 1; id < num_positive_; ++id) {
            const Root& a = roots_[static_cast<size_t>(highest_id_)];
            const Root& b = roots_[static_cast<size_t>(id)];
            bool b_ge_a = true;
            for (int j = 0; j < rank_; ++j)
                if (b.coords[static_cast<size_t>(j)] < a.coords[static_cast<size_t>(j)]) { b_ge_a = false; break; }
            if (b_ge_a) highest_id_ = id;
        }
        const Root& hi = roots_[static_cast<size_t>(highest_id_)];
        for (int id = 0; id < num_positive_; ++id) {
            bool leq = true;
            for (int j = 0; j < rank_; ++j)
                if (roots_[static_cast<size_t>(id)].coords[static_cast<size_t>(j)] > hi.coords[static_cast<size_t>(j)]) { leq = false; break; }
            if (!leq)
                throw Error("no dominance-maximal positive root in " + type_.to_string());
        }
    }
};

/// Factory matching the operation name used throughout the docs.
inline RootSystem build_root_system(CartanType t) { return RootSystem(t); }

/// Cartan integer c_{ab} = 2(a,b)/(a,a). Both arguments must be roots.
inline int cartan_integer(const RootSystem& rs, const Root& a, const Root& b) {
    rs.require_root(a);
    rs.require_root(b);
    long long num = 2 * rs.bilinear(a, b);
    long long den = rs.bilinear(a, a);
    // Integrality is axiom (3); a failure here would be a generation bug.
    if (num % den != 0)
        throw Error("Cartan integer is not integral for " + a.to_string() + ", " + b.to_string());
    return static_cast<int>(num / den);
}

/// Reflection through a applied to v: v - c_{a v} * a. v may be any integer
/// vector of the right rank; roots map to roots.
inline Root reflect(const RootSystem& rs, const Root& a, const Root& v) {
    rs.require_root(a);
    long long num = 2 * rs.bilinear(a, v);
    long long den = rs.bilinear(a, a);
    if (num % den != 0)
        throw Error("reflection coefficient not integral for " + a.to_string() + ", " + v.to_string());
    long long c = num / den;
    Root out = v;
    for (int i = 0; i < rs.rank(); ++i)
        out.coords[static_cast<size_t>(i)] -= static_cast<int>(c) * a.coords[static_cast<size_t>(i)];
    return out;
}

/// Dominance order on roots: a <= b iff a = b or b - a is nonzero with all
/// coordinates >= 0.
inline bool dominance_leq(const RootSystem& rs, const Root& a, const Root& b) {
    rs.require_root(a);
    rs.require_root(b);
    if (a == b) return true;
    bool nonzero = false;
    for (int i = 0; i < rs.rank(); ++i) {
        int d = b.coords[static_cast<size_t>(i)] - a.coords[static_cast<size_t>(i)];
        if (d < 0) return false;
        if (d > 0) nonzero = true;
    }
    return nonzero;
}

inline const Root& highest_root(const RootSystem& rs) { return rs.highest_root(); }

/// A Hessenberg set: a subset of the positive roots whose complement (the
/// ideal) is upward closed in dominance order.
class HessenbergSet {
public:
    HessenbergSet() = default;

    /// Positive-root ids belonging to the set, ascending.
    const std::vector<int>& root_ids() const { return roots_; }
    /// Positive-root ids of the complementary ideal, ascending.
    const std::vector<int>& ideal_ids() const { return ideal_; }

    bool contains(int pos_id) const { return member_[static_cast<size_t>(pos_id)]; }
    int size() const { return static_cast<int>(roots_.size()); }

    std::string to_string(const RootSystem& rs) const {
        std::string s = "{";
        for (size_t i = 0; i < roots_.size(); ++i) {
            if (i) s += ", ";
            s += rs.root(roots_[i]).to_string();
        }
        return s + "}";
    }

private:
    friend HessenbergSet make_hessenberg(const RootSystem&, const std::vector<Root>&);
    std::vector<int> roots_;
    std::vector<int> ideal_;
    std::vector<char> member_;
};

/// Builds the Hessenberg set Phi+ \ removed; throws NotAnIdealError (with a
/// witness pair) unless removed is upward closed in dominance order.
inline HessenbergSet make_hessenberg(const RootSystem& rs, const std::vector<Root>& removed) {
    int m = rs.num_positive();
    std::vector<char> rem(static_cast<size_t>(m), 0);
    for (const auto& r : removed) {
        int id = rs.require_root(r);
        if (!rs.id_is_positive(id))
            throw NotARootError("removed root is not positive: " + r.to_string());
        rem[static_cast<size_t>(id)] = 1;
    }
    for (int b = 0; b < m; ++b) {
        if (!rem[static_cast<size_t>(b)]) continue;
        for (int a = 0; a < m; ++a) {
            if (rem[static_cast<size_t>(a)] || a == b) continue;
            if (dominance_leq(rs, rs.root(b), rs.root(a)))
                throw NotAnIdealError("removed set is not an upper ideal: " + rs.root(b).to_string() +
                                          " removed but " + rs.root(a).to_string() + " above it is not",
                                      rs.root(b).coords, rs.root(a).coords);
        }
    }
    HessenbergSet h;
    h.member_.assign(static_cast<size_t>(m), 0);
    for (int id = 0; id < m; ++id) {
        if (rem[static_cast<size_t>(id)])
            h.ideal_.push_back(id);
        else {
            h.roots_.push_back(id);
            h.member_[static_cast<size_t>(id)] = 1;
        }
    }
    return h;
}

/// Phi+ \ {highest root}.
inline HessenbergSet highest_root_hessenberg(const RootSystem& rs) {
    return make_hessenberg(rs, {rs.highest_root()});
}

/// True iff h is exactly Phi+ \ {highest root}.
inline bool is_highest_root_set(const RootSystem& rs, const HessenbergSet& h) {
    return h.ideal_ids() == std::vector<int>{rs.highest_root_id()};
}

/// All Hessenberg sets of rs (every upward-closed subset of Phi+ as the
/// removed ideal). Intended for desk-scale exhaustive checks.
inline std::vector<HessenbergSet> enumerate_hessenberg_sets(const RootSystem& rs) {
    int m = rs.num_positive();
    std::vector<HessenbergSet> out;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Root> removed;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) removed.push_back(rs.root(i));
        try {
            out.push_back(make_hessenberg(rs, removed));
        } catch (const NotAnIdealError&) {
            continue;
        }
    }
    return out;
}

} // namespace gkmflow
