#pragma once

#include <random>
#include <string>
#include <vector>

#include "annihilator.hpp"
#include "core.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "special_units.hpp"

namespace grkit {

// Coefficient field selector: p = 0 means the rationals, otherwise the field
// with p^k elements. Accepted spellings: "0", "7", "2^3".
struct FieldChoice {
    std::uint64_t p = 0;
    unsigned k = 1;

    std::string str() const {
        if (p == 0) return "Q";
        std::string s = "F" + std::to_string(p);
        if (k > 1) s += "^" + std::to_string(k);
        return s;
    }
};

inline FieldChoice parse_field_choice(const std::string& text) {
    FieldChoice fc;
    auto caret = text.find('^');
    std::string ps = text.substr(0, caret == std::string::npos ? text.size() : caret);
    if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos || ps.size() > 10)
        throw error("field must be 0, a prime, or prime^degree");
    fc.p = std::stoull(ps);
    if (caret != std::string::npos) {
        std::string ks = text.substr(caret + 1);
        if (ks.empty() || ks.find_first_not_of("0123456789") != std::string::npos || ks.size() > 2)
            throw error("field degree must be a small positive integer");
        fc.k = static_cast<unsigned>(std::stoul(ks));
        if (fc.p == 0) throw error("field 0 (the rationals) takes no degree");
    }
    if (fc.p > 0) PrimeField check(fc.p);  // validates primality and range
    if (fc.k < 1) throw error("field degree must be at least 1");
    return fc;
}

// Calls fn with the chosen field instance; fn must be generic over the field.
template <class Fn>
auto with_field(const FieldChoice& fc, Fn&& fn) {
    if (fc.p == 0) return fn(RationalField{});
    if (fc.k == 1) return fn(PrimeField(fc.p));
    return fn(ExtensionField(fc.p, fc.k));
}

namespace detail {

// Rows of B land in the row space spanned by `basis` and the two spans agree.
template <Field F>
bool spans_match(const F& f, const std::vector<GroupRingElement<F>>& basis,
                 const std::vector<GroupRingElement<F>>& rows, int expected_dim) {
    int n = basis.empty() ? (rows.empty() ? 0 : rows[0].group().order())
                          : basis[0].group().order();
    DenseMatrix<F> K(f, static_cast<int>(basis.size()), n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto v = to_dense(basis[i]);
        for (int j = 0; j < n; ++j) K.at(static_cast<int>(i), j) = v[j];
    }
    std::vector<int> pivots;
    int kdim = rref_in_place(K, &pivots);
    if (kdim != static_cast<int>(basis.size())) return false;  // basis must be independent
    if (kdim != expected_dim) return false;

    DenseMatrix<F> B(f, static_cast<int>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto v = to_dense(rows[i]);
        for (int j = 0; j < n; ++j) B.at(static_cast<int>(i), j) = v[j];
    }
    if (rank(B) != expected_dim) return false;
    for (const auto& r : rows)
        if (!in_row_space(K, pivots, to_dense(r))) return false;
    return true;
}

template <Field F>
void lemma2_over(const FiniteGroup& G, F f, VerificationReport& rep) {
    const int n = G.order();
    auto one = GroupRingElement<F>::one(G, f);
    for (Elt w = 1; w < n; ++w) {
        int expected = n - n / G.element_order(w);
        auto wh = hat(G, f, w);
        auto ann = left_annihilator(wh);
        if (ann.dimension != expected) {
            rep.counterexample("w = " + G.element_name(w) + ": annihilator dimension " +
                               std::to_string(ann.dimension) + ", expected " +
                               std::to_string(expected) + " over " + f.name());
            continue;
        }
        auto wm1 = sub(GroupRingElement<F>::of_element(G, f, w), one);
        std::vector<GroupRingElement<F>> ideal_rows;
        for (Elt g = 0; g < n; ++g)
            ideal_rows.push_back(mul(GroupRingElement<F>::of_element(G, f, g), wm1));
        if (!spans_match(f, ann.basis, ideal_rows, expected)) {
            rep.counterexample("w = " + G.element_name(w) +
                               ": annihilator differs from the ideal generated by w - 1 over " +
                               f.name());
            continue;
        }
        rep.cases_checked += 1;
    }
}

// Integral version: z annihilates the cyclic sum over Z exactly when its
// coefficient sums over each left coset of <w> vanish, and every such z is
// y (w - 1) for an integral y reconstructed from the coset decomposition.
inline void lemma2_integral_shadow(const FiniteGroup& G, VerificationReport& rep) {
    IntegerRing Z;
    const int n = G.order();
    auto one = GroupRingElement<IntegerRing>::one(G, Z);
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (Elt w = 1; w < n; ++w) {
        int ord = G.element_order(w);
        auto wh = hat(G, Z, w);
        auto wm1 = sub(GroupRingElement<IntegerRing>::of_element(G, Z, w), one);
        auto trans = left_transversal(G, cyclic_subgroup(G, w));
        for (int trial = 0; trial < 3; ++trial) {
            // random coset-sum-zero z, checked to annihilate, then rebuilt as y (w-1)
            GroupRingElement<IntegerRing> z(G, Z), y(G, Z);
            for (Elt t : trans) {
                int running = 0;
                Elt tw = t;
                std::vector<std::pair<Elt, int>> picks;
                for (int j = 0; j < ord - 1; ++j) {
                    int c = coeff(rng);
                    picks.push_back({tw, c});
                    running += c;
                    tw = G.mul(tw, w);
                }
                picks.push_back({tw, -running});
                for (int j = 0; j < ord; ++j) {
                    z.add_to(picks[static_cast<std::size_t>(j)].first,
                             BigInt(picks[static_cast<std::size_t>(j)].second));
                    // y accumulates a_j * t (1 + w + ... + w^{j-1})
                    Elt step = t;
                    for (int m = 0; m < j; ++m) {
                        y.add_to(step, BigInt(picks[static_cast<std::size_t>(j)].second));
                        step = G.mul(step, w);
                    }
                }
            }
            if (!mul(z, wh).is_zero()) {
                rep.counterexample("w = " + G.element_name(w) +
                                   ": coset-sum-zero element fails to annihilate over Z");
                return;
            }
            if (!(mul(y, wm1) == z)) {
                rep.counterexample("w = " + G.element_name(w) +
                                   ": integral reconstruction y (w-1) != z");
                return;
            }
            ++rep.cases_checked;
        }
        for (int trial = 0; trial < 3; ++trial) {
            // random y: z = y (w-1) must annihilate and have zero coset sums
            GroupRingElement<IntegerRing> y(G, Z);
            for (Elt g = 0; g < n; ++g) y.add_to(g, BigInt(coeff(rng)));
            auto z = mul(y, wm1);
            if (!mul(z, wh).is_zero()) {
                rep.counterexample("w = " + G.element_name(w) +
                                   ": y (w-1) fails to annihilate over Z");
                return;
            }
            for (Elt t : trans) {
                BigInt s = 0;
                Elt tw = t;
                for (int j = 0; j < ord; ++j) {
                    s += z.coeff(tw);
                    tw = G.mul(tw, w);
                }
                if (s != 0) {
                    rep.counterexample("w = " + G.element_name(w) +
                                       ": y (w-1) has a nonzero coset sum");
                    return;
                }
            }
            ++rep.cases_checked;
        }
    }
}

}  // namespace detail

// For every non-identity w: the left annihilator of the cyclic sum
// hat(w) = w + w^2 + ... + w^|w| is the left ideal generated by w - 1, of
// dimension |G| - |G|/|w|. Over the rationals an integral shadow additionally
// round-trips random annihilator elements through the y (w - 1) form.
inline VerificationReport verify_lemma2(const FiniteGroup& G, const FieldChoice& fc) {
    VerificationReport rep;
    rep.id = "lemma2";
    rep.claim = "left annihilator of the cyclic sum hat(w) is the left ideal generated by "
                "w - 1, of dimension |G| - |G|/|w|";
    rep.param("group order", std::to_string(G.order()));
    rep.param("field", fc.str());
    with_field(fc, [&](auto f) { detail::lemma2_over(G, f, rep); });
    if (fc.p == 0) {
        detail::lemma2_integral_shadow(G, rep);
        if (rep.counterexamples.empty())
            rep.notes.push_back(
                "integral shadow: random annihilator elements over Z round-trip "
                "through the y (w - 1) form");
    }
    rep.finish();
    return rep;
}

// Exhaustive check of the annihilation test for t_w = (w-1)(alpha g + beta h):
// t_w hat(w) = 0 exactly when (g in h<w> and alpha + beta = 0) or
// (wg in h<w>, wh in g<w>, and alpha = beta). Scans every element w generating
// a non-normal cyclic subgroup, all g, h outside its normalizer, and
// coefficients in {-2,-1,1,2}.
inline VerificationReport verify_lemma3(const FiniteGroup& G) {
    VerificationReport rep;
    rep.id = "lemma3";
    rep.claim = "t_w hat(w) = 0 exactly under the coset conditions";
    rep.param("group order", std::to_string(G.order()));
    IntegerRing Z;
    const int n = G.order();
    static const int coeffs[4] = {-2, -1, 1, 2};
    bool any = false;
    for (Elt w = 1; w < n; ++w) {
        Subgroup W = cyclic_subgroup(G, w);
        if (is_normal(G, W)) continue;
        any = true;
        Subgroup N = normalizer_of_cyclic(G, w);
        auto wh = hat(G, Z, w);
        std::vector<Elt> outside;
        for (Elt g = 0; g < n; ++g)
            if (!N.contains(g)) outside.push_back(g);
        for (Elt g : outside)
            for (Elt h : outside)
                for (int a : coeffs)
                    for (int b : coeffs) {
                        BigInt alpha = a, beta = b;
                        bool predicted = lemma3_predicts_zero(G, Z, w, g, h, alpha, beta);
                        bool actual = mul(t_w(G, Z, w, g, h, alpha, beta), wh).is_zero();
                        if (predicted != actual) {
                            rep.counterexample(
                                "w = " + G.element_name(w) + ", g = " + G.element_name(g) +
                                ", h = " + G.element_name(h) + ", alpha = " + std::to_string(a) +
                                ", beta = " + std::to_string(b) + ": predicted " +
                                (predicted ? "zero" : "nonzero") + ", got " +
                                (actual ? "zero" : "nonzero"));
                            if (static_cast<int>(rep.counterexamples.size()) >= 5) {
                                rep.finish();
                                return rep;
                            }
                        } else {
                            ++rep.cases_checked;
                        }
                    }
    }
    if (!any) rep.notes.push_back("no non-normal cyclic subgroup; nothing to check");
    rep.finish();
    return rep;
}

namespace detail {

template <Field F>
void lemma7_over(const FiniteGroup& G, F f, VerificationReport& rep) {
    const int n = G.order();
    for (const Subgroup& H : all_subgroups(G)) {
        int expected = n / H.order();
        auto ann = left_annihilator_of_right_ideal(G, H, f);
        if (ann.dimension != expected) {
            rep.counterexample("subgroup of order " + std::to_string(H.order()) +
                               ": annihilator dimension " + std::to_string(ann.dimension) +
                               ", expected " + std::to_string(expected) + " over " + f.name());
            continue;
        }
        auto hh = hat_subgroup(G, f, H);
        std::vector<GroupRingElement<F>> rows;
        for (Elt t : left_transversal(G, H))
            rows.push_back(mul(GroupRingElement<F>::of_element(G, f, t), hh));
        if (!spans_match(f, ann.basis, rows, expected)) {
            rep.counterexample("subgroup of order " + std::to_string(H.order()) +
                               ": annihilator differs from the span of the subgroup-sum "
                               "translates over " +
                               f.name());
            continue;
        }
        ++rep.cases_checked;
    }
}

}  // namespace detail

// For every subgroup H: the left annihilator of the right ideal generated by
// {h - 1 : h in H} is spanned by the translates t hat(H) over a transversal,
// and has dimension [G:H].
inline VerificationReport verify_lemma7(const FiniteGroup& G, const FieldChoice& fc) {
    VerificationReport rep;
    rep.id = "lemma7";
    rep.claim = "left annihilator of the ideal generated by h - 1 over a subgroup is "
                "spanned by the subgroup-sum translates, of dimension [G:H]";
    rep.param("group order", std::to_string(G.order()));
    rep.param("field", fc.str());
    with_field(fc, [&](auto f) { detail::lemma7_over(G, f, rep); });
    rep.finish();
    return rep;
}

}  // namespace grkit
