#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "annihilator.hpp"
#include "core.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "linalg.hpp"
#include "ring.hpp"

namespace grkit {

// Over a field, x is a unit iff right multiplication by x is invertible.
template <Field F>
bool is_unit(const GroupRingElement<F>& x) {
    if (x.is_zero()) return false;
    return rank(right_mul_matrix(x)) == x.group().order();
}

// Two-sided inverse over a field. Solving z*x = 1 gives a left inverse; in a
// finite-dimensional algebra that forces the right inverse too, but both sides
// are verified anyway before returning.
template <Field F>
GroupRingElement<F> inverse(const GroupRingElement<F>& x) {
    const FiniteGroup& G = x.group();
    const F& f = x.ring();
    auto A = right_mul_matrix(x);
    std::vector<typename F::value_type> e0(G.order(), f.zero());
    e0[0] = f.one();
    auto sol = solve(A, e0);
    if (!sol) throw error("element is not a unit in " + f.name() + "[G]");
    auto z = from_dense(G, f, *sol);
    auto one = GroupRingElement<F>::one(G, f);
    if (!(mul(z, x) == one) || !(mul(x, z) == one))
        throw error("element is not a unit in " + f.name() + "[G]");
    return z;
}

namespace detail {

inline GroupRingElement<RationalField> to_rational(const GroupRingElement<IntegerRing>& x) {
    GroupRingElement<RationalField> out(x.group(), RationalField{});
    for (const auto& [g, c] : x.coeffs()) out.set(g, BigRat(c));
    return out;
}

inline std::optional<GroupRingElement<IntegerRing>> to_integer(
    const GroupRingElement<RationalField>& x) {
    GroupRingElement<IntegerRing> out(x.group(), IntegerRing{});
    for (const auto& [g, c] : x.coeffs()) {
        if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
        out.set(g, boost::multiprecision::numerator(c));
    }
    return out;
}

}  // namespace detail

// Over Z: invert over Q and demand integrality both ways.
inline bool is_unit(const GroupRingElement<IntegerRing>& x) {
    auto xq = detail::to_rational(x);
    if (!is_unit(xq)) return false;
    return detail::to_integer(inverse(xq)).has_value();
}

inline GroupRingElement<IntegerRing> inverse(const GroupRingElement<IntegerRing>& x) {
    auto xq = detail::to_rational(x);
    if (!is_unit(xq)) throw error("element is not a unit in Z[G]");
    auto zi = detail::to_integer(inverse(xq));
    if (!zi) throw error("element is a unit in Q[G] but not in Z[G]");
    auto one = GroupRingElement<IntegerRing>::one(x.group(), IntegerRing{});
    if (!(mul(*zi, x) == one) || !(mul(x, *zi) == one))
        throw error("internal: integral inverse failed verification");
    return *zi;
}

// Exhaustive sweep of F[G] in lexicographic coefficient order (identity
// coordinate most significant). Throws budget_error when |F|^|G| > budget.
template <FiniteField F>
std::vector<GroupRingElement<F>> enumerate_units(const FiniteGroup& G, F field,
                                                 std::uint64_t budget = 10000000) {
    std::uint64_t q = field.field_size();
    int n = G.order();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / q)
            throw budget_error("unit enumeration needs " + std::to_string(q) + "^" +
                               std::to_string(n) + " candidates, past the budget of " +
                               std::to_string(budget));
        total *= q;
    }
    std::vector<GroupRingElement<F>> units;
    std::vector<std::uint64_t> digits(n, 0);
    while (true) {
        GroupRingElement<F> x(G, field);
        for (int g = 0; g < n; ++g) {
            auto v = field.value_at(digits[g]);
            if (!field.is_zero(v)) x.set(g, v);
        }
        if (is_unit(x)) units.push_back(std::move(x));
        int pos = n - 1;
        while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    return units;
}

namespace detail {

// Bareiss fraction-free determinant. Intermediates are minors of the input,
// so with |entries| <= c and size n they stay below (sqrt(n) c)^n; callers
// guard that bound against int64.
inline long long det_bareiss_i64(std::vector<long long> m, int n) {
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i * n + k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i * n + j] =
                    (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        prev = m[k * n + k];
    }
    return sign * m[(n - 1) * n + (n - 1)];
}

}  // namespace detail

struct TrivialUnitScan {
    long long candidates = 0;
    long long units_found = 0;
    // nontrivial units found, at most 16 retained as examples
    std::vector<GroupRingElement<IntegerRing>> nontrivial;
    long long nontrivial_count = 0;
    bool only_trivial() const { return nontrivial_count == 0; }
};

// Sweep every integral element with coefficients in [-bound, bound] and count
// the units; a unit is trivial when its support is a single group element
// (necessarily +-g). Unit testing uses the determinant of the right
// multiplication matrix: z is a unit of ZG iff that matrix lies in GL_n(Z),
// i.e. det = +-1. Candidates whose augmentation is not +-1 are skipped (the
// augmentation of a unit is a unit of Z).
inline TrivialUnitScan trivial_unit_scan(const FiniteGroup& G, int bound,
                                         std::uint64_t budget = 10000000) {
    if (bound < 1) throw error("coefficient bound must be positive");
    int n = G.order();
    std::uint64_t radix = 2ULL * bound + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / radix)
            throw budget_error("trivial-unit scan needs " + std::to_string(radix) + "^" +
                               std::to_string(n) + " candidates, past the budget of " +
                               std::to_string(budget));
        total *= radix;
    }
    double growth = 1;
    for (int i = 0; i < n; ++i) growth *= std::sqrt(static_cast<double>(n)) * bound;
    if (growth > 4.0e18)
        throw error("coefficient bound too large for the exact int64 determinant");

    TrivialUnitScan out;
    std::vector<int> digits(n, 0);
    std::vector<long long> M(static_cast<std::size_t>(n) * n);
    while (true) {
        ++out.candidates;
        long long aug = 0;
        for (int g = 0; g < n; ++g) aug += digits[g] - bound;
        if (aug == 1 || aug == -1) {
            std::fill(M.begin(), M.end(), 0);
            for (int h = 0; h < n; ++h) {
                long long c = digits[h] - bound;
                if (c == 0) continue;
                for (Elt g = 0; g < n; ++g) M[static_cast<std::size_t>(G.mul(g, h)) * n + g] += c;
            }
            long long d = detail::det_bareiss_i64(M, n);
            if (d == 1 || d == -1) {
                ++out.units_found;
                int support = 0;
                for (int g = 0; g < n; ++g)
                    if (digits[g] != bound) ++support;
                if (support > 1) {
                    ++out.nontrivial_count;
                    if (out.nontrivial.size() < 16) {
                        GroupRingElement<IntegerRing> z(G, IntegerRing{});
                        for (int g = 0; g < n; ++g)
                            if (digits[g] != bound) z.set(g, BigInt(digits[g] - bound));
                        out.nontrivial.push_back(std::move(z));
                    }
                }
            }
        }
        int pos = n - 1;
        while (pos >= 0 && digits[pos] == 2 * bound) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    return out;
}

// Multiplicative order of a unit, or nullopt when it exceeds the cap. Says
// nothing stronger than "exceeds the cap": callers must not print "infinite".
template <Ring R>
std::optional<long long> unit_order(const GroupRingElement<R>& u, long long cap = 1000) {
    if (cap < 1) throw error("order cap must be positive");
    if constexpr (R::is_field) {
        if (!is_unit(u)) throw error("element is not a unit");
    } else {
        static_assert(std::is_same_v<R, IntegerRing>, "unit_order: unsupported non-field ring");
        if (!is_unit(u)) throw error("element is not a unit");
    }
    auto one = GroupRingElement<R>::one(u.group(), u.ring());
    auto y = u;
    for (long long k = 1; k <= cap; ++k) {
        if (y == one) return k;
        y = mul(y, u);
    }
    return std::nullopt;
}

}  // namespace grkit
