#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace grkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Commutative coefficient ring with exact arithmetic. Values are compared with
// operator== and every model keeps a single canonical representation per value.
template <class R>
concept Ring = requires(const R& r, const typename R::value_type& a, const typename R::value_type& b) {
    typename R::value_type;
    { R::is_field } -> std::convertible_to<bool>;
    { r.zero() } -> std::same_as<typename R::value_type>;
    { r.one() } -> std::same_as<typename R::value_type>;
    { r.from_int(static_cast<long long>(0)) } -> std::same_as<typename R::value_type>;
    { r.add(a, b) } -> std::same_as<typename R::value_type>;
    { r.sub(a, b) } -> std::same_as<typename R::value_type>;
    { r.mul(a, b) } -> std::same_as<typename R::value_type>;
    { r.neg(a) } -> std::same_as<typename R::value_type>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.characteristic() } -> std::convertible_to<unsigned long long>;
    { r.str(a) } -> std::convertible_to<std::string>;
    { r.name() } -> std::convertible_to<std::string>;
    { a == b } -> std::convertible_to<bool>;
    { r == r } -> std::convertible_to<bool>;
};

template <class R>
concept Field = Ring<R> && R::is_field && requires(const R& r, const typename R::value_type& a) {
    { r.inv(a) } -> std::same_as<typename R::value_type>;
};

// Finite fields additionally enumerate their values by index, which the unit
// enumerator uses for a deterministic lexicographic sweep.
template <class R>
concept FiniteField = Field<R> && requires(const R& r, std::uint64_t i) {
    { r.field_size() } -> std::convertible_to<std::uint64_t>;
    { r.value_at(i) } -> std::same_as<typename R::value_type>;
};

struct IntegerRing {
    using value_type = BigInt;
    static constexpr bool is_field = false;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a == 0; }
    unsigned long long characteristic() const { return 0; }
    std::string str(const value_type& a) const { return a.str(); }
    std::string name() const { return "Z"; }
    bool operator==(const IntegerRing&) const { return true; }
};

struct RationalField {
    using value_type = BigRat;
    static constexpr bool is_field = true;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw error("division by zero in Q");
        return 1 / a;
    }
    bool is_zero(const value_type& a) const { return a == 0; }
    unsigned long long characteristic() const { return 0; }
    std::string str(const value_type& a) const { return a.str(); }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const { return true; }
};

namespace detail {

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

// F_p for a runtime prime p < 2^31. Values are canonical residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint64_t;
    static constexpr bool is_field = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p_ > 0x7fffffffULL) throw error("prime fields are capped at p < 2^31");
        if (!detail::is_prime_u64(p_)) throw error(std::to_string(p_) + " is not prime");
    }

    std::uint64_t p() const { return p_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }
    value_type from_int(long long v) const {
        long long m = static_cast<long long>(p_);
        long long r = v % m;
        if (r < 0) r += m;
        return static_cast<value_type>(r);
    }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const {
        if (a == 0) throw error("division by zero in " + name());
        // extended euclid
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        return from_int(t);
    }
    bool is_zero(value_type a) const { return a == 0; }
    unsigned long long characteristic() const { return p_; }
    std::uint64_t field_size() const { return p_; }
    value_type value_at(std::uint64_t i) const { return i % p_; }
    std::string str(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

// F_{p^k} as F_p[t] modulo a monic irreducible of degree k. Values are
// canonical coefficient vectors of length k, constant term first. The default
// modulus is the least irreducible in the base-p encoding sum(c_i p^i), and
// irreducibility is established by trial division against every lower-degree
// monic polynomial.
class ExtensionField {
public:
    using value_type = std::vector<std::uint64_t>;
    static constexpr bool is_field = true;

    ExtensionField(std::uint64_t p, unsigned k) : base_(p), k_(k) {
        if (k_ < 1) throw error("extension degree must be at least 1");
        if (k_ > 16) throw error("extension degree is capped at 16");
        double q = 1;
        for (unsigned i = 0; i < k_; ++i) {
            q *= static_cast<double>(p);
            if (q > 1e18) throw error("field size overflows");
        }
        modulus_ = least_irreducible();
    }

    std::uint64_t p() const { return base_.p(); }
    unsigned degree() const { return k_; }
    // monic modulus, length k+1, constant term first
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    value_type zero() const { return value_type(k_, 0); }
    value_type one() const {
        value_type v(k_, 0);
        v[0] = base_.one();
        return v;
    }
    value_type from_int(long long x) const {
        value_type v(k_, 0);
        v[0] = base_.from_int(x);
        return v;
    }
    value_type add(const value_type& a, const value_type& b) const {
        value_type v(k_);
        for (unsigned i = 0; i < k_; ++i) v[i] = base_.add(a[i], b[i]);
        return v;
    }
    value_type sub(const value_type& a, const value_type& b) const {
        value_type v(k_);
        for (unsigned i = 0; i < k_; ++i) v[i] = base_.sub(a[i], b[i]);
        return v;
    }
    value_type neg(const value_type& a) const {
        value_type v(k_);
        for (unsigned i = 0; i < k_; ++i) v[i] = base_.neg(a[i]);
        return v;
    }
    value_type mul(const value_type& a, const value_type& b) const {
        std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < k_; ++j)
                prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
        }
        reduce(prod);
        prod.resize(k_);
        return prod;
    }
    value_type inv(const value_type& a) const {
        if (is_zero(a)) throw error("division by zero in " + name());
        // extended euclid in F_p[t]
        std::vector<std::uint64_t> r0 = modulus_, r1(a);
        strip(r1);
        std::vector<std::uint64_t> t0{0}, t1{1};
        while (!(r1.size() == 1 && r1[0] == 0)) {
            auto [q, rem] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto qt1 = poly_mul(q, t1);
            auto nt = poly_sub(t0, qt1);
            t0 = std::move(t1);
            t1 = std::move(nt);
        }
        // r0 is now a nonzero constant gcd
        std::uint64_t c = base_.inv(r0[0]);
        value_type out(k_, 0);
        for (std::size_t i = 0; i < t0.size() && i < k_; ++i) out[i] = base_.mul(t0[i], c);
        return out;
    }
    bool is_zero(const value_type& a) const {
        for (auto c : a)
            if (c != 0) return false;
        return true;
    }
    unsigned long long characteristic() const { return base_.p(); }
    std::uint64_t field_size() const {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k_; ++i) q *= base_.p();
        return q;
    }
    value_type value_at(std::uint64_t i) const {
        value_type v(k_);
        for (unsigned d = 0; d < k_; ++d) {
            v[d] = i % base_.p();
            i /= base_.p();
        }
        return v;
    }
    std::string str(const value_type& a) const {
        std::string s;
        for (unsigned i = k_; i-- > 0;) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(a[i]);
            } else {
                if (a[i] != 1) s += std::to_string(a[i]) + "*";
                s += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
    std::string name() const {
        return "F" + std::to_string(base_.p()) + "^" + std::to_string(k_);
    }
    bool operator==(const ExtensionField& o) const {
        return base_ == o.base_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

private:
    static void strip(std::vector<std::uint64_t>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    }
    std::vector<std::uint64_t> poly_mul(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = base_.add(out[i + j], base_.mul(a[i], b[j]));
        strip(out);
        return out;
    }
    std::vector<std::uint64_t> poly_sub(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uint64_t av = i < a.size() ? a[i] : 0;
            std::uint64_t bv = i < b.size() ? b[i] : 0;
            out[i] = base_.sub(av, bv);
        }
        strip(out);
        return out;
    }
    // division with remainder; divisor need not be monic
    std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> divmod(
        std::vector<std::uint64_t> num, const std::vector<std::uint64_t>& den) const {
        strip(num);
        std::vector<std::uint64_t> q(std::max<std::size_t>(1, num.size()), 0);
        std::uint64_t lead_inv = base_.inv(den.back());
        while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
            std::size_t shift = num.size() - den.size();
            std::uint64_t c = base_.mul(num.back(), lead_inv);
            if (c == 0) break;
            q[shift] = base_.add(q[shift], c);
            for (std::size_t i = 0; i < den.size(); ++i)
                num[shift + i] = base_.sub(num[shift + i], base_.mul(c, den[i]));
            strip(num);
            if (num.size() == 1 && num[0] == 0) break;
            if (num.size() >= den.size() && num.back() == 0) strip(num);
        }
        strip(q);
        return {q, num};
    }
    void reduce(std::vector<std::uint64_t>& prod) const {
        for (std::size_t d = prod.size(); d-- > k_;) {
            std::uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            // t^d = t^(d-k) * (t^k mod modulus) since modulus is monic
            for (unsigned i = 0; i < k_; ++i) {
                std::uint64_t sub_ = base_.mul(c, modulus_[i]);
                prod[d - k_ + i] = base_.sub(prod[d - k_ + i], sub_);
            }
        }
        prod.resize(std::max<std::size_t>(prod.size(), k_), 0);
    }
    bool is_irreducible(const std::vector<std::uint64_t>& f) const {
        // trial division by every monic polynomial of degree 1..k-1
        for (unsigned d = 1; d < k_; ++d) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= base_.p();
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::uint64_t> g(d + 1, 0);
                std::uint64_t v = idx;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = v % base_.p();
                    v /= base_.p();
                }
                g[d] = 1;
                auto [q, rem] = divmod(f, g);
                if (rem.size() == 1 && rem[0] == 0) return false;
            }
        }
        return true;
    }
    std::vector<std::uint64_t> least_irreducible() const {
        if (k_ == 1) return {0, 1};  // plain F_p, modulus t
        std::uint64_t count = 1;
        for (unsigned i = 0; i < k_; ++i) {
            count *= base_.p();
            if (count > 2000000) throw error("modulus search space too large");
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint64_t> f(k_ + 1, 0);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < k_; ++i) {
                f[i] = v % base_.p();
                v /= base_.p();
            }
            f[k_] = 1;
            if (is_irreducible(f)) return f;
        }
        throw error("no irreducible modulus found");  // unreachable for genuine primes
    }

    PrimeField base_;
    unsigned k_;
    std::vector<std::uint64_t> modulus_;
};

static_assert(Ring<IntegerRing>);
static_assert(Field<RationalField>);
static_assert(FiniteField<PrimeField>);
static_assert(FiniteField<ExtensionField>);
static_assert(!Field<IntegerRing>);

}  // namespace grkit
