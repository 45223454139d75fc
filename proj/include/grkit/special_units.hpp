#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "construct.hpp"
#include "core.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "units.hpp"

namespace grkit {

// g in h<w>, with the cyclic subgroup passed in so hot loops can reuse it
inline bool in_left_coset(const FiniteGroup& G, const Subgroup& W, Elt g, Elt h) {
    return W.contains(G.mul(G.inverse(h), g));
}

inline bool in_left_coset_of_cyclic(const FiniteGroup& G, Elt w, Elt g, Elt h) {
    return in_left_coset(G, cyclic_subgroup(G, w), g, h);
}

template <Ring R>
void validate_square_zero_instance(const FiniteGroup& G, const R&, Elt w, Elt g) {
    Subgroup N = normalizer_of_cyclic(G, w);
    if (N.order() == G.order())
        throw error("<" + G.element_name(w) + "> is normal; a non-normal cyclic subgroup is required");
    if (N.contains(g))
        throw error("g = " + G.element_name(g) + " lies in the normalizer of <" +
                    G.element_name(w) + ">");
}

// t_w = (w - 1)(alpha g + beta h), the test element of the zero-product
// criterion. Preconditions: alpha, beta nonzero, <w> non-normal, g and h
// outside its normalizer.
template <Ring R>
GroupRingElement<R> t_w(const FiniteGroup& G, R ring, Elt w, Elt g, Elt h,
                        const typename R::value_type& alpha, const typename R::value_type& beta) {
    if (ring.is_zero(alpha) || ring.is_zero(beta))
        throw error("t_w needs nonzero coefficients");
    validate_square_zero_instance(G, ring, w, g);
    validate_square_zero_instance(G, ring, w, h);
    auto one = GroupRingElement<R>::one(G, ring);
    auto wm1 = sub(GroupRingElement<R>::of_element(G, ring, w), one);
    auto combo = add(GroupRingElement<R>::monomial(G, ring, g, alpha),
                     GroupRingElement<R>::monomial(G, ring, h, beta));
    return mul(wm1, combo);
}

// The coset-and-coefficient criterion for t_w * what = 0:
//   (i)  g in h<w> and alpha + beta = 0, or
//   (ii) wg in h<w>, wh in g<w>, and alpha = beta.
template <Ring R>
bool lemma3_predicts_zero(const FiniteGroup& G, const R& ring, Elt w, Elt g, Elt h,
                          const typename R::value_type& alpha,
                          const typename R::value_type& beta) {
    Subgroup W = cyclic_subgroup(G, w);
    bool cond_i = in_left_coset(G, W, g, h) && ring.is_zero(ring.add(alpha, beta));
    bool cond_ii = in_left_coset(G, W, G.mul(w, g), h) && in_left_coset(G, W, G.mul(w, h), g) &&
                   alpha == beta;
    return cond_i || cond_ii;
}

// x_w(g) = 1 + (w-1) g what. Since what (w-1) = 0, the non-identity part
// squares to zero, making this a unit with inverse 1 - (w-1) g what and the
// power law x^n = 1 + n (w-1) g what.
template <Ring R>
GroupRingElement<R> x_w(const FiniteGroup& G, R ring, Elt w, Elt g) {
    validate_square_zero_instance(G, ring, w, g);
    auto one = GroupRingElement<R>::one(G, ring);
    auto wm1 = sub(GroupRingElement<R>::of_element(G, ring, w), one);
    auto nil = mul(mul(wm1, GroupRingElement<R>::of_element(G, ring, g)), hat(G, ring, w));
    return add(one, nil);
}

// e = hat(g)/|g| and f = 1 - e; needs |g| invertible in the ring.
template <Ring R>
std::pair<GroupRingElement<R>, GroupRingElement<R>> idempotent_pair(const FiniteGroup& G, R ring,
                                                                    Elt g) {
    int m = G.element_order(g);
    if constexpr (R::is_field) {
        auto mval = ring.from_int(m);
        if (ring.is_zero(mval))
            throw error("characteristic " + std::to_string(ring.characteristic()) +
                        " divides |g| = " + std::to_string(m) + "; hat(g)/|g| is undefined");
        auto e = scalar_mul(ring.inv(mval), hat(G, ring, g));
        auto f = sub(GroupRingElement<R>::one(G, ring), e);
        return {std::move(e), std::move(f)};
    } else {
        if (m != 1)
            throw error("|g| = " + std::to_string(m) + " is not invertible in " + ring.name());
        return {GroupRingElement<R>::one(G, ring), GroupRingElement<R>(G, ring)};
    }
}

// A pair of commuting integral units whose powers stay distinct, together with
// their closed-form inverses and a group element that separates the power
// supports. The group is owned by the pair so the elements stay valid.
struct WitnessPair {
    std::shared_ptr<const FiniteGroup> group;
    std::string group_name;
    GroupRingElement<IntegerRing> u, u_inv, v, v_inv;
    Elt marker = 0;
};

namespace detail {

inline void check_witness_pair(const WitnessPair& wp) {
    auto one = GroupRingElement<IntegerRing>::one(*wp.group, IntegerRing{});
    if (!(mul(wp.u, wp.u_inv) == one) || !(mul(wp.u_inv, wp.u) == one))
        throw error("internal: stated inverse of u fails");
    if (!(mul(wp.v, wp.v_inv) == one) || !(mul(wp.v_inv, wp.v) == one))
        throw error("internal: stated inverse of v fails");
    if (!(mul(wp.u, wp.v) == mul(wp.v, wp.u))) throw error("internal: witness units do not commute");
}

}  // namespace detail

// Q16 = <a,b | a^8=1, b^2=a^4, a^b=a^-1>:
//   u = 1 + (a^-1 - a) bhat            u^-1 = 1 - (a^-1 - a) bhat
//   v = 6(a+a^3)(1-a^4) + 9a^2 - 8a^6  v^-1 = 6(a+a^3)(1-a^4) + 9a^6 - 8a^2
// marker ab appears in every supp(u^n), never in supp(v^m).
inline WitnessPair q16_witnesses() {
    auto G = std::make_shared<const FiniteGroup>(construct("q16"));
    IntegerRing Z;
    Elt a = G->generator_labels().at("a");
    Elt b = G->generator_labels().at("b");
    auto E = [&](Elt g) { return GroupRingElement<IntegerRing>::of_element(*G, Z, g); };
    auto one = GroupRingElement<IntegerRing>::one(*G, Z);
    auto nil = mul(sub(E(G->inverse(a)), E(a)), hat(*G, Z, b));
    auto head = scalar_mul(BigInt(6), mul(add(E(a), E(G->power(a, 3))), sub(one, E(G->power(a, 4)))));
    WitnessPair wp{
        G,
        "Q16",
        add(one, nil),
        sub(one, nil),
        add(head, sub(scalar_mul(BigInt(9), E(G->power(a, 2))), scalar_mul(BigInt(8), E(G->power(a, 6))))),
        add(head, sub(scalar_mul(BigInt(9), E(G->power(a, 6))), scalar_mul(BigInt(8), E(G->power(a, 2))))),
        G->mul(a, b)};
    detail::check_witness_pair(wp);
    return wp;
}

// H_{3,8} = <a,b | a^3=b^8=1, a^b=a^-1>: same shape with the roles of the
// generators adapted, marker again ab.
inline WitnessPair h38_witnesses() {
    auto G = std::make_shared<const FiniteGroup>(construct("hsn:3,8"));
    IntegerRing Z;
    Elt a = G->generator_labels().at("a");
    Elt b = G->generator_labels().at("b");
    auto E = [&](Elt g) { return GroupRingElement<IntegerRing>::of_element(*G, Z, g); };
    auto one = GroupRingElement<IntegerRing>::one(*G, Z);
    auto nil = mul(sub(E(G->inverse(a)), E(a)), hat(*G, Z, b));
    auto head = scalar_mul(BigInt(6), mul(add(E(b), E(G->power(b, 3))), sub(one, E(G->power(b, 4)))));
    WitnessPair wp{
        G,
        "H3,8",
        add(one, nil),
        sub(one, nil),
        add(head, sub(scalar_mul(BigInt(9), E(G->power(b, 2))), scalar_mul(BigInt(8), E(G->power(b, 6))))),
        add(head, sub(scalar_mul(BigInt(9), E(G->power(b, 6))), scalar_mul(BigInt(8), E(G->power(b, 2))))),
        G->mul(a, b)};
    detail::check_witness_pair(wp);
    return wp;
}

// Checks u^i != v^j over a symmetric window of exponents. Both units must
// commute (checked; the claim is about a free abelian pair). Scan order is
// 1..N then -1..-N on both axes; the first coincidence is reported.
inline VerificationReport independence_window(const GroupRingElement<IntegerRing>& u,
                                              const GroupRingElement<IntegerRing>& v, int window) {
    u.require_compatible(v);
    if (window < 1) throw error("window must be positive");
    if (!(mul(u, v) == mul(v, u)))
        throw error("independence window requires commuting units");
    VerificationReport rep;
    rep.id = "window";
    rep.claim = "power independence over a finite window";
    rep.param("window", window);

    auto ui = inverse(u);
    auto vi = inverse(v);
    std::vector<long long> exps;
    for (int k = 1; k <= window; ++k) exps.push_back(k);
    for (int k = 1; k <= window; ++k) exps.push_back(-k);

    auto powers_of = [&](const GroupRingElement<IntegerRing>& x,
                         const GroupRingElement<IntegerRing>& xinv) {
        std::vector<GroupRingElement<IntegerRing>> fwd{x}, bwd{xinv};
        for (int k = 1; k < window; ++k) {
            fwd.push_back(mul(fwd.back(), x));
            bwd.push_back(mul(bwd.back(), xinv));
        }
        std::vector<GroupRingElement<IntegerRing>> all;
        for (int k = 0; k < window; ++k) all.push_back(fwd[k]);
        for (int k = 0; k < window; ++k) all.push_back(bwd[k]);
        return all;
    };
    auto up = powers_of(u, ui);
    auto vp = powers_of(v, vi);
    for (std::size_t i = 0; i < up.size(); ++i)
        for (std::size_t j = 0; j < vp.size(); ++j) {
            ++rep.cases_checked;
            if (up[i] == vp[j] && rep.counterexamples.empty())
                rep.counterexample("u^" + std::to_string(exps[i]) + " = v^" +
                                   std::to_string(exps[j]));
        }
    rep.finish();
    return rep;
}

}  // namespace grkit
