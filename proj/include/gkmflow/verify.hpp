// verify.hpp
// ----------
// Structural verification of the inversion-set and order propositions:
// cover identities for inversions and h-inversions, the simple-edge and
// length-bound corollaries, the diamond lemma, and the gamma-length lemma
// with its uniqueness corollary. Each check returns a PropReport whose
// failures carry a human-readable witness.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gkmflow/weyl.hpp"

namespace gkmflow {

struct PropReport {
    bool pass = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& witness) {
        if (!ok) {
            pass = false;
            failures.push_back(witness);
        }
    }
};

namespace detail {

inline bool contains_id(const std::vector<int>& s, int x) {
    return std::find(s.begin(), s.end(), x) != s.end();
}

/// True when u -> w is an edge of the Hessenberg graph (some positive root
/// beta with w = s_beta u and w^{-1} beta in -h).
inline bool has_edge(const WeylGroup& g, const HessenbergSet& h, int u, int w) {
    for (int b : h_inversions(g, w, h))
        if (g.multiply(g.reflection(b), w) == u) return true;
    return false;
}

} // namespace detail

/// N_v = {alpha} cup (s_alpha N_w cap Phi+) cup (N_w cap s_alpha Phi-) for
/// every cover (w, v, alpha).
inline PropReport verify_inversion_cover(const WeylGroup& g) {
    const RootSystem& rs = g.root_system();
    PropReport rep;
    for (int w = 0; w < g.size(); ++w) {
        auto nw = inversions(g, w);
        for (auto [v, alpha] : covers(g, w)) {
            int refl = g.reflection(alpha);
            std::vector<int> expect = {alpha};
            for (int b : nw) {
                int img = g.act_on_root(refl, b);
                if (rs.id_is_positive(img)) expect.push_back(img); // s_alpha N_w cap Phi+
                else expect.push_back(b);                          // N_w cap s_alpha Phi-
            }
            std::sort(expect.begin(), expect.end());
            expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
            auto nv = inversions(g, v);
            std::sort(nv.begin(), nv.end());
            rep.require(nv == expect, "inversion cover identity fails at w=" + g.name(w) + ", v=" + g.name(v));
        }
    }
    return rep;
}

/// For every cover (w, v, alpha) and every beta in N_v:
///   beta in s_alpha N_w cap Phi+  =>  (beta in N^h_v <=> s_alpha beta in N^h_w);
///   beta in N_w cap s_alpha Phi-  and beta in N^h_v  =>  beta in N^h_w.
inline PropReport verify_h_inversion_cover(const WeylGroup& g, const HessenbergSet& h) {
    const RootSystem& rs = g.root_system();
    PropReport rep;
    for (int w = 0; w < g.size(); ++w) {
        auto nw = inversions(g, w);
        auto nhw = h_inversions(g, w, h);
        for (auto [v, alpha] : covers(g, w)) {
            int refl = g.reflection(alpha);
            auto nhv = h_inversions(g, v, h);
            for (int b : inversions(g, v)) {
                int sb = g.act_on_root(refl, b);
                std::string at = " at w=" + g.name(w) + ", v=" + g.name(v) + ", beta=" + rs.root(b).to_string();
                if (rs.id_is_positive(sb) && detail::contains_id(nw, sb))
                    rep.require(detail::contains_id(nhv, b) == detail::contains_id(nhw, sb),
                                "h-inversion equivalence fails" + at);
                else if (detail::contains_id(nw, b) && !rs.id_is_positive(sb))
                    rep.require(!detail::contains_id(nhv, b) || detail::contains_id(nhw, b),
                                "h-inversion implication fails" + at);
            }
        }
    }
    return rep;
}

/// For covers along a simple root alpha:
///   alpha in N^h_v  => N^h_v = {alpha} cup s_alpha N^h_w, and
///   alpha not in N^h_v => N^h_v = s_alpha N^h_w.
inline PropReport verify_simple_edge_corollary(const WeylGroup& g, const HessenbergSet& h) {
    const RootSystem& rs = g.root_system();
    PropReport rep;
    for (int w = 0; w < g.size(); ++w) {
        auto nhw = h_inversions(g, w, h);
        for (auto [v, alpha] : covers(g, w)) {
            if (rs.root(alpha).height() != 1) continue;
            int refl = g.reflection(alpha);
            auto nhv = h_inversions(g, v, h);
            std::vector<int> expect;
            if (detail::contains_id(nhv, alpha)) expect.push_back(alpha);
            for (int b : nhw) expect.push_back(g.act_on_root(refl, b));
            std::sort(expect.begin(), expect.end());
            expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
            std::sort(nhv.begin(), nhv.end());
            rep.require(nhv == expect,
                        "simple-edge corollary fails at w=" + g.name(w) + ", v=" + g.name(v));
        }
    }
    return rep;
}

/// |N_v| - |Phi+ \ h| <= |N^h_v| <= |N^h_w| + 1 for every cover (adopted
/// reading of the length-bound corollary).
inline PropReport verify_h_length_bounds(const WeylGroup& g, const HessenbergSet& h) {
    PropReport rep;
    int ideal_size = static_cast<int>(h.ideal_ids().size());
    for (int w = 0; w < g.size(); ++w) {
        int lhw = hessenberg_length(g, w, h);
        for (auto [v, alpha] : covers(g, w)) {
            int lhv = hessenberg_length(g, v, h);
            int lv = g.length(v);
            rep.require(lv - ideal_size <= lhv && lhv <= lhw + 1,
                        "h-length bounds fail at w=" + g.name(w) + ", v=" + g.name(v));
        }
    }
    return rep;
}

/// Diamond lemma: for a cover (w, v) and a simple index i with
/// l(s_i w) = l(w) + 1 and s_i w != v: s_i v > v, l(s_i v) = l(s_i w) + 1,
/// and the edge w -> v lies in the Hessenberg graph iff s_i w -> s_i v does.
inline PropReport verify_diamond_lemma(const WeylGroup& g, const HessenbergSet& h) {
    PropReport rep;
    for (int w = 0; w < g.size(); ++w)
        for (auto [v, alpha] : covers(g, w))
            for (int i = 0; i < g.rank(); ++i) {
                int siw = g.multiply(g.simple_reflection(i), w);
                if (g.length(siw) != g.length(w) + 1 || siw == v) continue;
                int siv = g.multiply(g.simple_reflection(i), v);
                std::string at = " at w=" + g.name(w) + ", v=" + g.name(v) + ", i=" + std::to_string(i + 1);
                rep.require(g.length(siv) == g.length(v) + 1 && g.length(siv) == g.length(siw) + 1,
                            "diamond length claim fails" + at);
                rep.require(detail::has_edge(g, h, w, v) == detail::has_edge(g, h, siw, siv),
                            "diamond edge equivalence fails" + at);
            }
    return rep;
}

/// Gamma-length lemma: for v > w in Bruhat order, l_gamma(w) = l_gamma(v)
/// iff v covers w, N_w = N^gamma_w, and some beta in N_v has
/// v^{-1} beta = -gamma.
inline PropReport verify_gamma_length_lemma(const WeylGroup& g, const HessenbergSet& h_gamma,
                                            const LabeledGraph& bruhat) {
    const RootSystem& rs = g.root_system();
    PropReport rep;
    int neg_gamma = rs.negate(rs.highest_root_id());
    for (int w = 0; w < g.size(); ++w) {
        auto nw = inversions(g, w);
        auto nhw = h_inversions(g, w, h_gamma);
        int lhw = hessenberg_length(g, w, h_gamma);
        for (int v = 0; v < g.size(); ++v) {
            if (v == w || !flow_up_leq(bruhat, w, v)) continue;
            bool is_cover = false;
            if (g.length(v) == g.length(w) + 1)
                for (auto [c, a] : covers(g, w))
                    if (c == v) is_cover = true;
            bool has_beta = false;
            for (int b : inversions(g, v))
                if (g.act_on_root(g.inverse(v), b) == neg_gamma) has_beta = true;
            bool left = lhw == hessenberg_length(g, v, h_gamma);
            bool right = is_cover && nw == nhw && has_beta;
            rep.require(left == right, "gamma-length lemma fails at w=" + g.name(w) + ", v=" + g.name(v));
        }
    }
    return rep;
}

/// Uniqueness corollary: for fixed w and beta in N^gamma_w, at most one
/// v > w with l_gamma(v) = l_gamma(w) and v^{-1} beta = -gamma. Also checks
/// that no element sends two roots to -gamma.
inline PropReport verify_partner_uniqueness(const WeylGroup& g, const HessenbergSet& h_gamma,
                                            const LabeledGraph& bruhat) {
    const RootSystem& rs = g.root_system();
    PropReport rep;
    int neg_gamma = rs.negate(rs.highest_root_id());
    for (int v = 0; v < g.size(); ++v) {
        int cnt = 0;
        for (int b = 0; b < rs.num_positive(); ++b)
            if (g.act_on_root(g.inverse(v), b) == neg_gamma) ++cnt;
        rep.require(cnt <= 1, "element " + g.name(v) + " deletes more than one edge");
    }
    for (int w = 0; w < g.size(); ++w) {
        int lhw = hessenberg_length(g, w, h_gamma);
        for (int b : h_inversions(g, w, h_gamma)) {
            int found = 0;
            for (int v = 0; v < g.size(); ++v) {
                if (v == w || !flow_up_leq(bruhat, w, v)) continue;
                if (!detail::contains_id(inversions(g, v), b)) continue;
                if (hessenberg_length(g, v, h_gamma) != lhw) continue;
                if (g.act_on_root(g.inverse(v), b) != neg_gamma) continue;
                ++found;
            }
            rep.require(found <= 1, "partner not unique at w=" + g.name(w) + ", beta=" + rs.root(b).to_string());
        }
    }
    return rep;
}

} // namespace gkmflow
