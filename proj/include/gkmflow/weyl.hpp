// weyl.hpp
// --------
// Weyl group enumeration and Bruhat/Hessenberg combinatorics: length,
// reduced words, inversions, h-inversions, labeled graphs, flow-up
// reachability, covers, and the gamma-partner cover used by the divided
// difference operator.
//
// Element identity is the integer matrix of the action on simple roots
// (column j = image of alpha_j); cached words are conveniences. Canonical
// element order is (length, lex-least reduced word), which fixes every
// output ordering.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkmflow/polyring.hpp"
#include "gkmflow/rootsystem.hpp"

namespace gkmflow {

struct WeylElement {
    std::vector<int> matrix; // column-major k x k: matrix[j*k + r] = r-th coord of image of alpha_j
    std::vector<int> word;   // lex-least reduced word, 0-based generator indices
    int len = 0;
    int index = 0;   // position in canonical order
    int inverse = 0; // index of the inverse element

    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

/// Directed graph on group elements with positive-root edge labels; every
/// edge satisfies target = s_root * source and len(target) > len(source).
/// Reachability (the flow-up preorder) is precomputed as bitsets.
struct LabeledGraph {
    struct Edge {
        int source;
        int target;
        int root; // positive root id
    };
    int num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::uint64_t> reach; // row-major bitset, words_per_row per vertex
    int words_per_row = 0;

    bool reachable(int x, int y) const {
        return (reach[static_cast<size_t>(x) * static_cast<size_t>(words_per_row) + static_cast<size_t>(y) / 64] >>
                (static_cast<size_t>(y) % 64)) & 1;
    }
};

class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs) : rs_(rs) { generate(); }

    const RootSystem& root_system() const { return rs_; }
    int rank() const { return rs_.rank(); }
    int size() const { return static_cast<int>(elements_.size()); }

    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& element(int w) const { return elements_[static_cast<size_t>(w)]; }
    int length(int w) const { return elements_[static_cast<size_t>(w)].len; }
    int identity() const { return 0; }
    int longest() const { return longest_; }

    int inverse(int w) const { return elements_[static_cast<size_t>(w)].inverse; }
    int multiply(int a, int b) const { return mult_[static_cast<size_t>(a) * elements_.size() + static_cast<size_t>(b)]; }

    /// Index of the simple reflection s_i.
    int simple_reflection(int i) const { return simple_elem_[static_cast<size_t>(i)]; }
    /// Index of the reflection s_alpha for a positive root id.
    int reflection(int pos_root_id) const { return refl_elem_[static_cast<size_t>(pos_root_id)]; }

    /// Image root id of `root_id` under element w.
    int act_on_root(int w, int root_id) const {
        return root_perm_[static_cast<size_t>(w)][static_cast<size_t>(root_id)];
    }

    /// Action of w on an arbitrary coordinate vector.
    Root act_on_vector(int w, const Root& v) const {
        int k = rs_.rank();
        const auto& m = elements_[static_cast<size_t>(w)].matrix;
        Root out(std::vector<int>(static_cast<size_t>(k), 0));
        for (int j = 0; j < k; ++j) {
            int vj = v.coords[static_cast<size_t>(j)];
            if (vj == 0) continue;
            for (int r = 0; r < k; ++r)
                out.coords[static_cast<size_t>(r)] += m[static_cast<size_t>(j * k + r)] * vj;
        }
        return out;
    }

    /// Looks up an element by its matrix; nullopt if absent (not a group element).
    std::optional<int> find(const std::vector<int>& matrix) const {
        auto it = index_.find(matrix);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Element of a word (product of simple reflections, left to right).
    int element_of_word(const std::vector<int>& word) const {
        int w = identity();
        for (int i : word) w = multiply(w, simple_reflection(i));
        return w;
    }

    /// "1.2.1"-style name (1-based generator indices), "e" for the identity.
    std::string name(int w) const {
        const auto& word = elements_[static_cast<size_t>(w)].word;
        if (word.empty()) return "e";
        std::string s;
        for (size_t i = 0; i < word.size(); ++i) {
            if (i) s += ".";
            s += std::to_string(word[i] + 1);
        }
        return s;
    }

    /// Parses a "1.2.1"-style name; throws on malformed input or bad indices.
    int parse_name(const std::string& s) const {
        if (s == "e") return identity();
        if (s.empty()) throw Error("malformed element name ''");
        std::vector<int> word;
        size_t i = 0;
        while (i < s.size()) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw Error("malformed element name '" + s + "'");
            int idx = std::stoi(s.substr(start, i - start));
            if (idx < 1 || idx > rank()) throw Error("generator index out of range in '" + s + "'");
            word.push_back(idx - 1);
            if (i < s.size()) {
                if (s[i] != '.') throw Error("malformed element name '" + s + "'");
                ++i;
                if (i == s.size()) throw Error("malformed element name '" + s + "'");
            }
        }
        return element_of_word(word);
    }

private:
    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> mult_;
    std::vector<int> simple_elem_;
    std::vector<int> refl_elem_;
    std::vector<std::vector<int>> root_perm_;
    int longest_ = 0;

    std::vector<int> identity_matrix() const {
        int k = rs_.rank();
        std::vector<int> m(static_cast<size_t>(k * k), 0);
        for (int j = 0; j < k; ++j) m[static_cast<size_t>(j * k + j)] = 1;
        return m;
    }

    std::vector<int> simple_matrix(int i) const {
        int k = rs_.rank();
        std::vector<int> m(static_cast<size_t>(k * k), 0);
        const auto& c = rs_.cartan_matrix();
        for (int j = 0; j < k; ++j) {
            // column j = alpha_j - C[i][j] alpha_i
            m[static_cast<size_t>(j * k + j)] += 1;
            m[static_cast<size_t>(j * k + i)] -= c[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return m;
    }

    static std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int k) {
        std::vector<int> out(static_cast<size_t>(k * k), 0);
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                int blj = b[static_cast<size_t>(j * k + l)];
                if (blj == 0) continue;
                for (int r = 0; r < k; ++r)
                    out[static_cast<size_t>(j * k + r)] += a[static_cast<size_t>(l * k + r)] * blj;
            }
        return out;
    }

    // True if column vector is a negative root (all coords <= 0, nonzero).
    static bool column_negative(const std::vector<int>& m, int k, int col) {
        for (int r = 0; r < k; ++r)
            if (m[static_cast<size_t>(col * k + r)] > 0) return false;
        return true;
    }

    void generate() {
        int k = rs_.rank();
        struct Raw {
            std::vector<int> mat;
            std::vector<int> inv;
            int len;
        };
        std::vector<std::vector<int>> gen(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) gen[static_cast<size_t>(i)] = simple_matrix(i);

        std::vector<Raw> raw;
        std::map<std::vector<int>, int> seen;
        raw.push_back({identity_matrix(), identity_matrix(), 0});
        seen[raw[0].mat] = 0;
        // BFS by right multiplication; new elements appear at length + 1.
        for (size_t head = 0; head < raw.size(); ++head) {
            for (int i = 0; i < k; ++i) {
                auto m = mat_mul(raw[head].mat, gen[static_cast<size_t>(i)], k);
                if (seen.emplace(m, static_cast<int>(raw.size())).second) {
                    auto inv = mat_mul(gen[static_cast<size_t>(i)], raw[head].inv, k);
                    raw.push_back({std::move(m), std::move(inv), raw[head].len + 1});
                }
            }
        }

        // Lex-least reduced words, ascending by length: the first letter is the
        // least left descent; the rest is the word of s_i * w.
        std::vector<std::vector<int>> words(raw.size());
        std::vector<int> order(raw.size());
        for (size_t idx = 0; idx < raw.size(); ++idx) order[idx] = static_cast<int>(idx);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return raw[static_cast<size_t>(a)].len < raw[static_cast<size_t>(b)].len;
        });
        for (int idx : order) {
            const Raw& w = raw[static_cast<size_t>(idx)];
            if (w.len == 0) continue;
            int i = -1;
            for (int cand = 0; cand < k; ++cand)
                if (column_negative(w.inv, k, cand)) { i = cand; break; }
            auto rest = mat_mul(gen[static_cast<size_t>(i)], w.mat, k);
            int rest_idx = seen.at(rest);
            words[static_cast<size_t>(idx)] = words[static_cast<size_t>(rest_idx)];
            words[static_cast<size_t>(idx)].insert(words[static_cast<size_t>(idx)].begin(), i);
        }

        // Canonical order: (length, lex-least word).
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (raw[static_cast<size_t>(a)].len != raw[static_cast<size_t>(b)].len)
                return raw[static_cast<size_t>(a)].len < raw[static_cast<size_t>(b)].len;
            return words[static_cast<size_t>(a)] < words[static_cast<size_t>(b)];
        });

        int n = static_cast<int>(raw.size());
        elements_.resize(static_cast<size_t>(n));
        for (int pos = 0; pos < n; ++pos) {
            int old = order[static_cast<size_t>(pos)];
            WeylElement& e = elements_[static_cast<size_t>(pos)];
            e.matrix = raw[static_cast<size_t>(old)].mat;
            e.word = words[static_cast<size_t>(old)];
            e.len = raw[static_cast<size_t>(old)].len;
            e.index = pos;
            index_[e.matrix] = pos;
        }
        for (int pos = 0; pos < n; ++pos)
            elements_[static_cast<size_t>(pos)].inverse = index_.at(raw[static_cast<size_t>(order[static_cast<size_t>(pos)])].inv);

        simple_elem_.resize(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) simple_elem_[static_cast<size_t>(i)] = index_.at(gen[static_cast<size_t>(i)]);

        // Root permutations: perm[w][r] = id of w(root r). Built along words.
        int nroots = rs_.num_roots();
        std::vector<std::vector<int>> simple_perm(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(nroots)));
        for (int i = 0; i < k; ++i)
            for (int r = 0; r < nroots; ++r) {
                Root img = reflect(rs_, rs_.simple_root(i), rs_.root(r));
                simple_perm[static_cast<size_t>(i)][static_cast<size_t>(r)] = rs_.require_root(img);
            }
        root_perm_.assign(static_cast<size_t>(n), {});
        root_perm_[0].resize(static_cast<size_t>(nroots));
        for (int r = 0; r < nroots; ++r) root_perm_[0][static_cast<size_t>(r)] = r;
        // right-multiplication by generators, as index lookups
        std::vector<std::vector<int>> rmul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(k)));
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < k; ++i)
                rmul[static_cast<size_t>(w)][static_cast<size_t>(i)] =
                    index_.at(mat_mul(elements_[static_cast<size_t>(w)].matrix, gen[static_cast<size_t>(i)], k));
        // elements are sorted by length, so w * s_last always precedes w
        for (int w = 1; w < n; ++w) {
            const auto& word = elements_[static_cast<size_t>(w)].word;
            int last = word.back();
            int prefix = rmul[static_cast<size_t>(w)][static_cast<size_t>(last)];
            const auto& pp = root_perm_[static_cast<size_t>(prefix)];
            const auto& sp = simple_perm[static_cast<size_t>(last)];
            auto& out = root_perm_[static_cast<size_t>(w)];
            out.resize(static_cast<size_t>(nroots));
            for (int r = 0; r < nroots; ++r) out[static_cast<size_t>(r)] = pp[static_cast<size_t>(sp[static_cast<size_t>(r)])];
        }

        // Full multiplication table via word recursion: a * (b' = b s_i) = (a b) s_i.
        mult_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (int a = 0; a < n; ++a) {
            auto* row = &mult_[static_cast<size_t>(a) * static_cast<size_t>(n)];
            row[0] = a;
            for (int b = 1; b < n; ++b) {
                const auto& word = elements_[static_cast<size_t>(b)].word;
                int last = word.back();
                int prefix = rmul[static_cast<size_t>(b)][static_cast<size_t>(last)];
                row[b] = rmul[static_cast<size_t>(row[prefix])][static_cast<size_t>(last)];
            }
        }

        // Reflections for each positive root.
        int m = rs_.num_positive();
        refl_elem_.resize(static_cast<size_t>(m));
        for (int r = 0; r < m; ++r) {
            std::vector<int> mat(static_cast<size_t>(k * k));
            for (int j = 0; j < k; ++j) {
                Root img = reflect(rs_, rs_.root(r), rs_.simple_root(j));
                for (int c = 0; c < k; ++c) mat[static_cast<size_t>(j * k + c)] = img.coords[static_cast<size_t>(c)];
            }
            refl_elem_[static_cast<size_t>(r)] = index_.at(mat);
        }

        // The longest element: unique element of length |Phi+|.
        int count = 0;
        for (int w = 0; w < n; ++w)
            if (elements_[static_cast<size_t>(w)].len == m) {
                longest_ = w;
                ++count;
            }
        if (count != 1) throw Error("longest element is not unique");
    }
};

inline WeylGroup generate_group(const RootSystem& rs) { return WeylGroup(rs); }

/// N_w = {alpha in Phi+ : w^{-1} alpha in Phi-}, as positive root ids.
inline std::vector<int> inversions(const WeylGroup& g, int w) {
    const RootSystem& rs = g.root_system();
    int winv = g.inverse(w);
    std::vector<int> out;
    for (int r = 0; r < rs.num_positive(); ++r)
        if (!rs.id_is_positive(g.act_on_root(winv, r))) out.push_back(r);
    return out;
}

/// N^h_w = {alpha in Phi+ : w^{-1} alpha in -h}, as positive root ids.
inline std::vector<int> h_inversions(const WeylGroup& g, int w, const HessenbergSet& h) {
    const RootSystem& rs = g.root_system();
    int winv = g.inverse(w);
    std::vector<int> out;
    for (int r = 0; r < rs.num_positive(); ++r) {
        int img = g.act_on_root(winv, r);
        if (!rs.id_is_positive(img) && h.contains(rs.negate(img))) out.push_back(r);
    }
    return out;
}

/// |N^h_w| (the in-degree of w in the Hessenberg graph).
inline int hessenberg_length(const WeylGroup& g, int w, const HessenbergSet& h) {
    return static_cast<int>(h_inversions(g, w, h).size());
}

/// The graph with edges u -> w for w = s_alpha u, alpha in Phi+,
/// w^{-1} alpha in -h. Edges into w biject with N^h_w.
inline LabeledGraph hessenberg_graph(const WeylGroup& g, const HessenbergSet& h) {
    LabeledGraph graph;
    int n = g.size();
    graph.num_vertices = n;
    for (int w = 0; w < n; ++w)
        for (int r : h_inversions(g, w, h))
            graph.edges.push_back({g.multiply(g.reflection(r), w), w, r});
    std::sort(graph.edges.begin(), graph.edges.end(), [](const LabeledGraph::Edge& a, const LabeledGraph::Edge& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.target != b.target) return a.target < b.target;
        return a.root < b.root;
    });
    // Reachability closure; edges increase length, so a reverse sweep over the
    // canonical (length-sorted) order is a reverse topological order.
    int wpr = (n + 63) / 64;
    graph.words_per_row = wpr;
    graph.reach.assign(static_cast<size_t>(n) * static_cast<size_t>(wpr), 0);
    std::vector<std::vector<int>> succ(static_cast<size_t>(n));
    for (const auto& e : graph.edges) succ[static_cast<size_t>(e.source)].push_back(e.target);
    for (int x = n - 1; x >= 0; --x) {
        auto* row = &graph.reach[static_cast<size_t>(x) * static_cast<size_t>(wpr)];
        row[static_cast<size_t>(x) / 64] |= 1ull << (static_cast<size_t>(x) % 64);
        for (int y : succ[static_cast<size_t>(x)]) {
            const auto* yrow = &graph.reach[static_cast<size_t>(y) * static_cast<size_t>(wpr)];
            for (int t = 0; t < wpr; ++t) row[static_cast<size_t>(t)] |= yrow[static_cast<size_t>(t)];
        }
    }
    return graph;
}

/// Reachability in the directed graph (reflexive).
inline bool flow_up_leq(const LabeledGraph& graph, int x, int y) { return graph.reachable(x, y); }

/// The full Bruhat graph (h = Phi+); its reachability is Bruhat order.
inline LabeledGraph bruhat_graph(const WeylGroup& g) {
    return hessenberg_graph(g, make_hessenberg(g.root_system(), {}));
}

/// All covers (v, alpha) of w: v = s_alpha w with len(v) = len(w) + 1.
inline std::vector<std::pair<int, int>> covers(const WeylGroup& g, int w) {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < g.root_system().num_positive(); ++r) {
        int v = g.multiply(g.reflection(r), w);
        if (g.length(v) == g.length(w) + 1) out.emplace_back(v, r);
    }
    return out;
}

/// The unique cover v of w with l_gamma(v) = l_gamma(w) and
/// v^{-1}(alpha_i) = -gamma, together with the root alpha of v = s_alpha w;
/// nullopt when no such cover exists.
inline std::optional<std::pair<int, int>> find_gamma_partner(const WeylGroup& g, const HessenbergSet& h_gamma,
                                                             int w, int i) {
    const RootSystem& rs = g.root_system();
    if (!is_highest_root_set(rs, h_gamma))
        throw Error("gamma-partner search requires the highest-root Hessenberg set");
    int neg_gamma = rs.negate(rs.highest_root_id());
    int alpha_i = rs.simple_root_id(i);
    int lw = hessenberg_length(g, w, h_gamma);
    std::optional<std::pair<int, int>> found;
    for (auto [v, r] : covers(g, w)) {
        if (g.act_on_root(g.inverse(v), alpha_i) != neg_gamma) continue;
        if (hessenberg_length(g, v, h_gamma) != lw) continue;
        if (found)
            throw MultiplePartnersError("two gamma-partner covers of " + g.name(w) + " for i=" +
                                        std::to_string(i + 1) + ": " + g.name(found->first) + " and " + g.name(v));
        found = {v, r};
    }
    return found;
}

/// All reduced words of w, lexicographically ordered; throws
/// WordCapExceededError when more than `cap` words would be produced.
inline std::vector<std::vector<int>> reduced_words(const WeylGroup& g, int w, size_t cap = 10000) {
    if (g.length(w) == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 0; i < g.rank(); ++i) {
        int sw = g.multiply(g.simple_reflection(i), w);
        if (g.length(sw) != g.length(w) - 1) continue;
        for (auto& rest : reduced_words(g, sw, cap)) {
            rest.insert(rest.begin(), i);
            out.push_back(std::move(rest));
            if (out.size() > cap)
                throw WordCapExceededError("element " + g.name(w) + " has more than " + std::to_string(cap) +
                                           " reduced words");
        }
    }
    return out;
}

/// Weyl-group action on polynomials: substitutes each variable a_j by the
/// linear form w(alpha_j). A ring automorphism; act(vw,p) = act(v, act(w,p)).
inline Polynomial act(const WeylGroup& g, int w, const Polynomial& p) {
    int k = g.rank();
    if (p.nvars() != k) throw Error("act: polynomial has wrong variable count");
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
        images.push_back(linear_form(g.root_system().root(g.act_on_root(w, g.root_system().simple_root_id(j)))));
    return p.substitute(images, k);
}

} // namespace gkmflow
