#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "core.hpp"
#include "group.hpp"

namespace grkit {

// Cheap invariants compared before any backtracking. Conjugacy class sizes are
// paired with element orders so candidate images can be bucketed tightly.
struct GroupFingerprint {
    int order = 0;
    bool abelian = false;
    int center_size = 0;
    // (element order, conjugacy class size) -> multiplicity
    std::map<std::pair<int, int>, int> profile;

    bool operator==(const GroupFingerprint&) const = default;
    auto operator<=>(const GroupFingerprint&) const = default;

    std::string str() const {
        std::string s = "order=" + std::to_string(order) + (abelian ? " abelian" : " nonabelian") +
                        " center=" + std::to_string(center_size) + " profile=";
        for (const auto& [k, m] : profile)
            s += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")x" +
                 std::to_string(m) + " ";
        return s;
    }
};

namespace detail {

inline std::vector<int> conjugacy_class_sizes(const FiniteGroup& G) {
    int n = G.order();
    std::vector<int> cls(n, -1);
    for (Elt g = 0; g < n; ++g) {
        if (cls[g] >= 0) continue;
        std::vector<Elt> orbit{g};
        cls[g] = 0;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (Elt x = 0; x < n; ++x) {
                Elt c = G.conjugate(orbit[i], x);
                if (cls[c] < 0) {
                    cls[c] = 0;
                    orbit.push_back(c);
                }
            }
        for (Elt e : orbit) cls[e] = static_cast<int>(orbit.size());
    }
    return cls;
}

}  // namespace detail

inline GroupFingerprint fingerprint(const FiniteGroup& G) {
    GroupFingerprint f;
    f.order = G.order();
    f.abelian = G.is_abelian();
    f.center_size = center(G).order();
    auto cls = detail::conjugacy_class_sizes(G);
    for (Elt g = 0; g < G.order(); ++g) ++f.profile[{G.element_order(g), cls[g]}];
    return f;
}

namespace detail {

class IsoSearch {
public:
    IsoSearch(const FiniteGroup& a, const FiniteGroup& b) : A_(a), B_(b) {
        // greedy generating sequence for A: highest element order first
        std::vector<Elt> by_order(A_.order());
        for (int i = 0; i < A_.order(); ++i) by_order[i] = i;
        std::stable_sort(by_order.begin(), by_order.end(), [&](Elt x, Elt y) {
            return A_.element_order(x) > A_.element_order(y);
        });
        std::vector<Elt> span{0};
        auto in_span = [&](Elt g) {
            return std::binary_search(span.begin(), span.end(), g);
        };
        while (static_cast<int>(span.size()) < A_.order()) {
            for (Elt g : by_order) {
                if (!in_span(g)) {
                    gens_.push_back(g);
                    span = closure_of(A_, gens_);
                    break;
                }
            }
        }
        auto clsA = conjugacy_class_sizes(A_);
        auto clsB = conjugacy_class_sizes(B_);
        for (Elt g : gens_) keys_.push_back({A_.element_order(g), clsA[g]});
        for (Elt h = 0; h < B_.order(); ++h)
            buckets_[{B_.element_order(h), clsB[h]}].push_back(h);
    }

    bool find(std::vector<Elt>* image_out) {
        images_.assign(gens_.size(), -1);
        if (!extend(0)) return false;
        if (image_out) *image_out = full_map_;
        return true;
    }

private:
    bool extend(std::size_t i) {
        if (i == gens_.size()) return check_map(true);
        auto it = buckets_.find(keys_[i]);
        if (it == buckets_.end()) return false;
        for (Elt cand : it->second) {
            images_[i] = cand;
            // partial consistency: the map must close over <gens up to i>
            if (!check_partial(i + 1)) continue;
            if (extend(i + 1)) return true;
        }
        images_[i] = -1;
        return false;
    }

    // BFS the closure of the first k generators, defining phi edge by edge.
    // Every (element, generator) edge is checked, so a surviving full map is a
    // homomorphism; injectivity rides along via the used[] marks.
    bool check_partial(std::size_t k) { return run_bfs(k, false); }
    bool check_map(bool record) { return run_bfs(gens_.size(), record); }

    bool run_bfs(std::size_t k, bool record) {
        int n = A_.order();
        std::vector<Elt> phi(n, -1);
        std::vector<char> used(B_.order(), 0);
        std::vector<Elt> q{0};
        phi[0] = 0;
        used[0] = 1;
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            Elt x = q[qi];
            for (std::size_t j = 0; j < k; ++j) {
                Elt y = A_.mul(x, gens_[j]);
                Elt fy = B_.mul(phi[x], images_[j]);
                if (phi[y] == -1) {
                    if (used[fy]) return false;
                    phi[y] = fy;
                    used[fy] = 1;
                    q.push_back(y);
                } else if (phi[y] != fy) {
                    return false;
                }
            }
        }
        if (record) {
            if (static_cast<int>(q.size()) != n) return false;
            full_map_ = phi;
        }
        return true;
    }

    const FiniteGroup& A_;
    const FiniteGroup& B_;
    std::vector<Elt> gens_;
    std::vector<std::pair<int, int>> keys_;
    std::map<std::pair<int, int>, std::vector<Elt>> buckets_;
    std::vector<Elt> images_;
    std::vector<Elt> full_map_;
};

}  // namespace detail

// Bounded-order isomorphism test: invariant screen, then backtracking over
// generator images. Orders above 64 are refused rather than left to explode.
inline bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B,
                          std::vector<Elt>* image_out = nullptr) {
    if (A.order() != B.order()) return false;
    if (A.order() > 64 || B.order() > 64)
        throw error("isomorphism testing is capped at order 64 (got " +
                    std::to_string(std::max(A.order(), B.order())) + ")");
    if (fingerprint(A) != fingerprint(B)) return false;
    detail::IsoSearch s(A, B);
    return s.find(image_out);
}

}  // namespace grkit
