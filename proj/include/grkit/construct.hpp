#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core.hpp"
#include "group.hpp"
#include "presentation.hpp"
#include "table_io.hpp"
#include "todd_coxeter.hpp"

namespace grkit {

struct GroupSpec;

struct CyclicSpec {
    long long n;
};
struct AbelianSpec {
    std::vector<long long> factors;
};
// C_s semidirect C_n with b a b^-1 = a^-1: elements (i, j), i mod s, j mod n,
// (i1,j1)(i2,j2) = (i1 + (-1)^j1 i2, j1 + j2), index i + s*j.
struct HsnSpec {
    long long s, n;
};
// Dicyclic of order 4n: <a,b | a^(2n)=1, b^2=a^n, b a b^-1 = a^-1>,
// elements a^i b^j with i mod 2n, j in {0,1}, index i + 2n*j.
struct DicyclicSpec {
    long long n;
};
struct ProductSpec {
    std::vector<GroupSpec> parts;
};
// Abelian group (invariant list) extended by C_m acting through the matrix
// `action`: row i lists the exponents of the image of the i-th abelian
// generator.
struct SemidirectSpec {
    std::vector<long long> abelian;
    long long m = 0;
    std::vector<std::vector<long long>> action;
};
struct FileSpec {
    std::string path;
};
struct PresentationSpec {
    std::string text;
};

struct GroupSpec {
    std::variant<CyclicSpec, AbelianSpec, HsnSpec, DicyclicSpec, ProductSpec, SemidirectSpec,
                 FileSpec, PresentationSpec>
        v;
};

inline FiniteGroup construct(const GroupSpec& spec, int coset_budget = 100000);

namespace detail {

inline void require_positive(long long v, const char* what) {
    if (v < 1) throw error(std::string(what) + " must be positive, got " + std::to_string(v));
}

inline FiniteGroup make_cyclic(long long n) {
    require_positive(n, "cyclic order");
    if (n > FiniteGroup::max_order) throw error("cyclic order too large");
    int ni = static_cast<int>(n);
    std::vector<std::vector<Elt>> t(ni, std::vector<Elt>(ni));
    for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b) t[a][b] = (a + b) % ni;
    std::map<std::string, Elt> labels;
    if (ni > 1) labels["a"] = 1;
    return FiniteGroup(t, std::move(labels));
}

inline FiniteGroup make_hsn(long long s, long long n) {
    require_positive(s, "hsn parameter s");
    require_positive(n, "hsn parameter n");
    long long N = s * n;
    if (N > FiniteGroup::max_order) throw error("hsn order too large");
    int si = static_cast<int>(s), ni = static_cast<int>(n), Ni = static_cast<int>(N);
    auto idx = [&](long long i, long long j) {
        return static_cast<int>(((i % s + s) % s) + s * ((j % n + n) % n));
    };
    std::vector<std::vector<Elt>> t(Ni, std::vector<Elt>(Ni));
    for (int i1 = 0; i1 < si; ++i1)
        for (int j1 = 0; j1 < ni; ++j1)
            for (int i2 = 0; i2 < si; ++i2)
                for (int j2 = 0; j2 < ni; ++j2) {
                    long long i = (j1 % 2 == 0) ? i1 + i2 : i1 - i2;
                    t[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 + j2);
                }
    std::map<std::string, Elt> labels;
    if (si > 1) labels["a"] = idx(1, 0);
    if (ni > 1) labels["b"] = idx(0, 1);
    return FiniteGroup(t, std::move(labels));
}

inline FiniteGroup make_dicyclic(long long n) {
    require_positive(n, "dicyclic parameter");
    long long N = 4 * n;
    if (N > FiniteGroup::max_order) throw error("dicyclic order too large");
    long long m = 2 * n;  // order of a
    auto idx = [&](long long i, long long j) {
        return static_cast<int>(((i % m + m) % m) + m * (((j % 2) + 2) % 2));
    };
    int Ni = static_cast<int>(N);
    std::vector<std::vector<Elt>> t(Ni, std::vector<Elt>(Ni));
    for (long long i1 = 0; i1 < m; ++i1)
        for (long long j1 = 0; j1 < 2; ++j1)
            for (long long i2 = 0; i2 < m; ++i2)
                for (long long j2 = 0; j2 < 2; ++j2) {
                    // a^i1 b^j1 a^i2 b^j2, using b a = a^-1 b and b^2 = a^n
                    long long i = (j1 == 0) ? i1 + i2 : i1 - i2;
                    long long j = j1 + j2;
                    if (j == 2) {
                        i += n;
                        j = 0;
                    }
                    t[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    std::map<std::string, Elt> labels;
    labels["a"] = idx(1, 0);
    labels["b"] = idx(0, 1);
    return FiniteGroup(t, std::move(labels));
}

inline FiniteGroup make_product(const FiniteGroup& A, const FiniteGroup& B) {
    long long N = static_cast<long long>(A.order()) * B.order();
    if (N > FiniteGroup::max_order) throw error("direct product order too large");
    int n2 = B.order(), Ni = static_cast<int>(N);
    auto idx = [&](Elt x, Elt y) { return x * n2 + y; };
    std::vector<std::vector<Elt>> t(Ni, std::vector<Elt>(Ni));
    for (Elt x1 = 0; x1 < A.order(); ++x1)
        for (Elt y1 = 0; y1 < n2; ++y1)
            for (Elt x2 = 0; x2 < A.order(); ++x2)
                for (Elt y2 = 0; y2 < n2; ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(A.mul(x1, x2), B.mul(y1, y2));
    return FiniteGroup(t);
}

inline FiniteGroup relabel_generators(FiniteGroup g, const std::vector<Elt>& gens) {
    std::map<std::string, Elt> labels;
    std::string name = "a";
    for (Elt x : gens) {
        labels[name] = x;
        name[0] = static_cast<char>(name[0] + 1);
        if (name[0] > 'z') throw error("too many generators to label");
    }
    return FiniteGroup([&] {
        std::vector<std::vector<Elt>> rows(g.order(), std::vector<Elt>(g.order()));
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) rows[a][b] = g.mul(a, b);
        return rows;
    }(), std::move(labels));
}

inline FiniteGroup make_abelian(const std::vector<long long>& factors) {
    if (factors.empty()) throw error("abelian spec needs at least one factor");
    for (long long d : factors) require_positive(d, "abelian invariant");
    FiniteGroup g = make_cyclic(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = make_product(g, make_cyclic(factors[i]));
    // generator per nontrivial factor: in the product indexing, the generator
    // of factor i is the unit vector in coordinate i
    std::vector<Elt> gens;
    long long stride = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
        if (factors[i] > 1) gens.push_back(static_cast<Elt>(stride));
        stride *= factors[i];
    }
    std::reverse(gens.begin(), gens.end());
    return relabel_generators(std::move(g), gens);
}

inline FiniteGroup make_semidirect(const SemidirectSpec& sd) {
    if (sd.abelian.empty()) throw error("semidirect spec needs an abelian part");
    require_positive(sd.m, "semidirect cyclic order");
    for (long long d : sd.abelian) require_positive(d, "abelian invariant");
    std::size_t k = sd.abelian.size();
    if (sd.action.size() != k) throw error("action matrix needs one row per abelian generator");
    for (const auto& row : sd.action)
        if (row.size() != k) throw error("action matrix must be square");

    long long D = 1;
    for (long long d : sd.abelian) D *= d;
    long long N = D * sd.m;
    if (N > FiniteGroup::max_order) throw error("semidirect order too large");

    // well-definedness: the image of a generator of order d_i must die at d_i
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if ((sd.action[i][j] % sd.abelian[j] + sd.abelian[j]) * sd.abelian[i] % sd.abelian[j] != 0)
                throw error("action is not well defined: entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") conflicts with the invariant factors");

    auto vec_of = [&](long long v) {
        std::vector<long long> x(k);
        for (std::size_t i = 0; i < k; ++i) {
            x[i] = v % sd.abelian[i];
            v /= sd.abelian[i];
        }
        return x;
    };
    auto idx_of = [&](const std::vector<long long>& x) {
        long long v = 0, stride = 1;
        for (std::size_t i = 0; i < k; ++i) {
            v += ((x[i] % sd.abelian[i]) + sd.abelian[i]) % sd.abelian[i] * stride;
            stride *= sd.abelian[i];
        }
        return v;
    };

    // phi as a permutation of 0..D-1
    std::vector<long long> phi(D);
    for (long long v = 0; v < D; ++v) {
        auto x = vec_of(v);
        std::vector<long long> y(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) y[j] += x[i] * sd.action[i][j];
        phi[v] = idx_of(y);
    }
    std::vector<char> hit(D, 0);
    for (long long v = 0; v < D; ++v) hit[phi[v]] = 1;
    for (long long v = 0; v < D; ++v)
        if (!hit[v]) throw error("action is not an automorphism (not bijective)");

    std::vector<std::vector<long long>> phi_pow(sd.m, std::vector<long long>(D));
    for (long long v = 0; v < D; ++v) phi_pow[0][v] = v;
    for (long long e = 1; e < sd.m; ++e)
        for (long long v = 0; v < D; ++v) phi_pow[e][v] = phi[phi_pow[e - 1][v]];
    for (long long v = 0; v < D; ++v)
        if (phi[phi_pow[sd.m - 1][v]] != v)
            throw error("action order does not divide " + std::to_string(sd.m));

    int Ni = static_cast<int>(N);
    auto idx = [&](long long v, long long j) { return static_cast<int>(v + D * (j % sd.m)); };
    std::vector<std::vector<Elt>> t(Ni, std::vector<Elt>(Ni));
    for (long long v1 = 0; v1 < D; ++v1)
        for (long long j1 = 0; j1 < sd.m; ++j1)
            for (long long v2 = 0; v2 < D; ++v2)
                for (long long j2 = 0; j2 < sd.m; ++j2) {
                    auto x = vec_of(v1);
                    auto y = vec_of(phi_pow[j1][v2]);
                    for (std::size_t i = 0; i < k; ++i) x[i] += y[i];
                    t[idx(v1, j1)][idx(v2, j2)] = idx(idx_of(x), j1 + j2);
                }
    std::vector<Elt> gens;
    long long stride = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (sd.abelian[i] > 1) gens.push_back(static_cast<Elt>(stride));
        stride *= sd.abelian[i];
    }
    if (sd.m > 1) gens.push_back(static_cast<Elt>(D));
    return relabel_generators(FiniteGroup(t), gens);
}

}  // namespace detail

inline FiniteGroup construct(const GroupSpec& spec, int coset_budget) {
    return std::visit(
        [&](const auto& s) -> FiniteGroup {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CyclicSpec>) {
                return detail::make_cyclic(s.n);
            } else if constexpr (std::is_same_v<T, AbelianSpec>) {
                return detail::make_abelian(s.factors);
            } else if constexpr (std::is_same_v<T, HsnSpec>) {
                return detail::make_hsn(s.s, s.n);
            } else if constexpr (std::is_same_v<T, DicyclicSpec>) {
                return detail::make_dicyclic(s.n);
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                if (s.parts.empty()) throw error("product spec needs at least one part");
                std::vector<FiniteGroup> parts;
                for (const auto& ps : s.parts) parts.push_back(construct(ps, coset_budget));
                FiniteGroup g = parts[0];
                for (std::size_t i = 1; i < parts.size(); ++i)
                    g = detail::make_product(g, parts[i]);
                // carry the component generators over: part i's elements sit at
                // stride prod of the orders of the later parts
                std::vector<Elt> gens;
                long long stride = 1;
                std::vector<long long> strides(parts.size());
                for (std::size_t i = parts.size(); i-- > 0;) {
                    strides[i] = stride;
                    stride *= parts[i].order();
                }
                for (std::size_t i = 0; i < parts.size(); ++i)
                    for (Elt pg : parts[i].generators())
                        gens.push_back(static_cast<Elt>(pg * strides[i]));
                return detail::relabel_generators(std::move(g), gens);
            } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
                return detail::make_semidirect(s);
            } else if constexpr (std::is_same_v<T, FileSpec>) {
                return read_group_table(s.path);
            } else {
                return coset_enumerate(parse_presentation(s.text), coset_budget);
            }
        },
        spec.v);
}

namespace detail {

// splits "a,b,(c,d),e" at top-level commas
inline std::vector<std::string> split_top_level(std::string_view s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline long long parse_ll(std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty()) throw error(std::string("expected a number for ") + what);
    std::size_t i = 0;
    bool neg = s[0] == '-';
    if (neg) ++i;
    if (i == s.size()) throw error(std::string("expected a number for ") + what);
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw error(std::string("bad number '") + std::string(s) + "' for " + what);
        v = v * 10 + (s[i] - '0');
        if (v > 1000000000) throw error(std::string("number too large for ") + what);
    }
    return neg ? -v : v;
}

}  // namespace detail

// Group spec mini-language:
//   cyclic:N | abelian:D1,D2,... | hsn:S,N | dicyclic:N | q8 | q16
//   product:SPEC,SPEC,...            (parenthesize parts that contain commas)
//   sd:(D1,...,Dk);M;(R1|...|Rk)     (Ri = comma-separated row of the action)
//   file:PATH | fp:PRESENTATION
inline GroupSpec parse_group_spec(std::string_view text) {
    using detail::split_top_level;
    using detail::trim;
    std::string_view s = trim(text);
    if (s.empty()) throw error("empty group spec");
    if (s.front() == '(' && s.back() == ')') {
        // strip one balanced outer layer
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
                break;
            }
        }
        if (wraps) return parse_group_spec(s.substr(1, s.size() - 2));
    }
    if (s == "q8") return {DicyclicSpec{2}};
    if (s == "q16") return {DicyclicSpec{4}};

    auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw error("unknown group spec '" + std::string(s) +
                    "' (expected cyclic:, abelian:, hsn:, dicyclic:, product:, sd:, file:, fp:, q8, q16)");
    std::string_view head = trim(s.substr(0, colon));
    std::string_view rest = s.substr(colon + 1);

    if (head == "cyclic") return {CyclicSpec{detail::parse_ll(rest, "cyclic order")}};
    if (head == "abelian") {
        AbelianSpec a;
        for (const auto& part : split_top_level(rest))
            a.factors.push_back(detail::parse_ll(part, "abelian invariant"));
        return {std::move(a)};
    }
    if (head == "hsn") {
        auto parts = split_top_level(rest);
        if (parts.size() != 2) throw error("hsn spec needs two parameters, hsn:S,N");
        return {HsnSpec{detail::parse_ll(parts[0], "hsn s"), detail::parse_ll(parts[1], "hsn n")}};
    }
    if (head == "dicyclic") return {DicyclicSpec{detail::parse_ll(rest, "dicyclic parameter")}};
    if (head == "product") {
        ProductSpec p;
        for (const auto& part : split_top_level(rest)) p.parts.push_back(parse_group_spec(part));
        if (p.parts.size() < 2) throw error("product spec needs at least two parts");
        return {std::move(p)};
    }
    if (head == "sd") {
        // sd:(d1,...,dk);m;(r1|r2|...|rk)
        std::string r(trim(rest));
        auto semi1 = r.find(';');
        if (semi1 == std::string::npos) throw error("sd spec: expected ';' after the abelian part");
        auto semi2 = r.find(';', semi1 + 1);
        if (semi2 == std::string::npos) throw error("sd spec: expected ';' after the cyclic order");
        auto strip_parens = [](std::string_view v) {
            v = trim(v);
            if (v.size() < 2 || v.front() != '(' || v.back() != ')')
                throw error("sd spec: expected a parenthesized list, got '" + std::string(v) + "'");
            return v.substr(1, v.size() - 2);
        };
        SemidirectSpec sd;
        for (const auto& part : split_top_level(strip_parens(std::string_view(r).substr(0, semi1))))
            sd.abelian.push_back(detail::parse_ll(part, "abelian invariant"));
        sd.m = detail::parse_ll(std::string_view(r).substr(semi1 + 1, semi2 - semi1 - 1),
                                "semidirect cyclic order");
        std::string_view rows = strip_parens(std::string_view(r).substr(semi2 + 1));
        std::string cur;
        std::vector<std::string> row_strs;
        for (char c : rows) {
            if (c == '|') {
                row_strs.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        row_strs.push_back(cur);
        for (const auto& rowstr : row_strs) {
            std::vector<long long> row;
            for (const auto& e : split_top_level(rowstr))
                row.push_back(detail::parse_ll(e, "action entry"));
            sd.action.push_back(std::move(row));
        }
        return {std::move(sd)};
    }
    if (head == "file") {
        std::string path(trim(rest));
        if (path.size() >= 2 && ((path.front() == '"' && path.back() == '"') ||
                                 (path.front() == '\'' && path.back() == '\'')))
            path = path.substr(1, path.size() - 2);
        if (path.empty()) throw error("file spec needs a path");
        return {FileSpec{std::move(path)}};
    }
    if (head == "fp") {
        std::string body(trim(rest));
        if (body.size() >= 2 && ((body.front() == '"' && body.back() == '"') ||
                                 (body.front() == '\'' && body.back() == '\'')))
            body = body.substr(1, body.size() - 2);
        if (body.empty()) throw error("fp spec needs a presentation");
        return {PresentationSpec{std::move(body)}};
    }
    throw error("unknown group spec head '" + std::string(head) + "'");
}

inline FiniteGroup construct(std::string_view spec_text, int coset_budget = 100000) {
    return construct(parse_group_spec(spec_text), coset_budget);
}

}  // namespace grkit
