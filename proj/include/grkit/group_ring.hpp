#pragma once

#include <map>
#include <string>
#include <vector>

#include "core.hpp"
#include "group.hpp"
#include "ring.hpp"

namespace grkit {

// Element of the group ring R[G], stored sparsely as index -> coefficient with
// zero coefficients pruned, so representations are canonical and operator==
// is structural. Elements remember their group (by address) and their ring;
// mixing them is an error, not a silent coercion.
template <Ring R>
class GroupRingElement {
public:
    using scalar = typename R::value_type;

    GroupRingElement(const FiniteGroup& G, R ring) : g_(&G), ring_(std::move(ring)) {}

    static GroupRingElement zero(const FiniteGroup& G, R ring) {
        return GroupRingElement(G, std::move(ring));
    }
    static GroupRingElement one(const FiniteGroup& G, R ring) {
        GroupRingElement e(G, std::move(ring));
        e.set(0, e.ring_.one());
        return e;
    }
    // c * g as an element
    static GroupRingElement monomial(const FiniteGroup& G, R ring, Elt g, scalar c) {
        GroupRingElement e(G, std::move(ring));
        e.set(g, std::move(c));
        return e;
    }
    static GroupRingElement of_element(const FiniteGroup& G, R ring, Elt g) {
        GroupRingElement e(G, std::move(ring));
        e.set(g, e.ring_.one());
        return e;
    }

    const FiniteGroup& group() const { return *g_; }
    const R& ring() const { return ring_; }
    const std::map<Elt, scalar>& coeffs() const { return c_; }

    scalar coeff(Elt g) const {
        auto it = c_.find(g);
        return it == c_.end() ? ring_.zero() : it->second;
    }

    void set(Elt g, scalar v) {
        if (g < 0 || g >= g_->order()) throw error("element index out of range");
        if (ring_.is_zero(v))
            c_.erase(g);
        else
            c_[g] = std::move(v);
    }

    void add_to(Elt g, const scalar& v) { set(g, ring_.add(coeff(g), v)); }

    bool is_zero() const { return c_.empty(); }
    int support_size() const { return static_cast<int>(c_.size()); }

    std::vector<Elt> support() const {
        std::vector<Elt> s;
        s.reserve(c_.size());
        for (const auto& [g, v] : c_) s.push_back(g);
        return s;
    }

    bool operator==(const GroupRingElement& o) const {
        require_compatible(o);
        return c_ == o.c_;
    }

    void require_compatible(const GroupRingElement& o) const {
        if (g_ != o.g_) throw error("group mismatch between group-ring elements");
        if (!(ring_ == o.ring_)) throw error("coefficient ring mismatch");
    }

private:
    const FiniteGroup* g_;
    R ring_;
    std::map<Elt, scalar> c_;
};

template <Ring R>
GroupRingElement<R> add(const GroupRingElement<R>& x, const GroupRingElement<R>& y) {
    x.require_compatible(y);
    GroupRingElement<R> out = x;
    for (const auto& [g, v] : y.coeffs()) out.add_to(g, v);
    return out;
}

template <Ring R>
GroupRingElement<R> neg(const GroupRingElement<R>& x) {
    GroupRingElement<R> out(x.group(), x.ring());
    for (const auto& [g, v] : x.coeffs()) out.set(g, x.ring().neg(v));
    return out;
}

template <Ring R>
GroupRingElement<R> sub(const GroupRingElement<R>& x, const GroupRingElement<R>& y) {
    x.require_compatible(y);
    GroupRingElement<R> out = x;
    for (const auto& [g, v] : y.coeffs()) out.add_to(g, y.ring().neg(v));
    return out;
}

template <Ring R>
GroupRingElement<R> scalar_mul(const typename R::value_type& c, const GroupRingElement<R>& x) {
    GroupRingElement<R> out(x.group(), x.ring());
    for (const auto& [g, v] : x.coeffs()) out.set(g, x.ring().mul(c, v));
    return out;
}

// convolution product
template <Ring R>
GroupRingElement<R> mul(const GroupRingElement<R>& x, const GroupRingElement<R>& y) {
    x.require_compatible(y);
    GroupRingElement<R> out(x.group(), x.ring());
    const FiniteGroup& G = x.group();
    for (const auto& [g, a] : x.coeffs())
        for (const auto& [h, b] : y.coeffs()) out.add_to(G.mul(g, h), x.ring().mul(a, b));
    return out;
}

template <Ring R>
GroupRingElement<R> pow(const GroupRingElement<R>& x, unsigned long long e) {
    GroupRingElement<R> acc = GroupRingElement<R>::one(x.group(), x.ring());
    GroupRingElement<R> base = x;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        if (e >>= 1) base = mul(base, base);
    }
    return acc;
}

// ring homomorphism onto R collapsing every group element to 1
template <Ring R>
typename R::value_type augmentation(const GroupRingElement<R>& x) {
    auto s = x.ring().zero();
    for (const auto& [g, v] : x.coeffs()) s = x.ring().add(s, v);
    return s;
}

// what = w + w^2 + ... + w^(|w|), the sum over <w>; augmentation |w|
template <Ring R>
GroupRingElement<R> hat(const FiniteGroup& G, R ring, Elt w) {
    GroupRingElement<R> out(G, std::move(ring));
    Elt x = w;
    do {
        out.add_to(x, out.ring().one());
        x = G.mul(x, w);
    } while (x != w);
    return out;
}

// Hhat = sum of the elements of a subgroup
template <Ring R>
GroupRingElement<R> hat_subgroup(const FiniteGroup& G, R ring, const Subgroup& H) {
    if (&H.parent() != &G) throw error("subgroup belongs to a different group");
    GroupRingElement<R> out(G, std::move(ring));
    for (Elt h : H.elements()) out.add_to(h, out.ring().one());
    return out;
}

template <Ring R>
std::vector<typename R::value_type> to_dense(const GroupRingElement<R>& x) {
    std::vector<typename R::value_type> v(x.group().order(), x.ring().zero());
    for (const auto& [g, c] : x.coeffs()) v[g] = c;
    return v;
}

template <Ring R>
GroupRingElement<R> from_dense(const FiniteGroup& G, R ring,
                               const std::vector<typename R::value_type>& v) {
    if (static_cast<int>(v.size()) != G.order()) throw error("dense vector has wrong length");
    GroupRingElement<R> out(G, std::move(ring));
    for (int g = 0; g < G.order(); ++g)
        if (!out.ring().is_zero(v[g])) out.set(g, v[g]);
    return out;
}

// "6 a^2 - b + 1" style rendering; terms ascend by element index
template <Ring R>
std::string to_string(const GroupRingElement<R>& x) {
    if (x.is_zero()) return "0";
    const R& ring = x.ring();
    std::string s;
    for (const auto& [g, v] : x.coeffs()) {
        std::string cs = ring.str(v);
        bool neg_head = !cs.empty() && cs[0] == '-';
        std::string mag = neg_head ? cs.substr(1) : cs;
        if (s.empty())
            s += neg_head ? "-" : "";
        else
            s += neg_head ? " - " : " + ";
        std::string name = x.group().element_name(g);
        if (g == 0) {
            s += mag;
        } else if (mag == "1") {
            s += name;
        } else {
            bool simple = mag.find_first_of("+-/*") == std::string::npos;
            s += (simple ? mag : "(" + mag + ")") + " " + name;
        }
    }
    return s;
}

}  // namespace grkit
