#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "core.hpp"
#include "group.hpp"
#include "isomorphism.hpp"

namespace grkit {

// Hypotheses of the six-group classification:
//   (a) the group has a non-normal subgroup, equivalently a non-normal cyclic one
//       (if every cyclic subgroup is normal, conjugation maps any subgroup into itself);
//   (b) every non-trivial cyclic subgroup has order in {2,3,4,5,6,8,12};
//   (c) for each non-normal cyclic subgroup <w> with normalizer N and all
//       g, h outside N: g<w> = h<w>, or both wg in h<w> and wh in g<w>.
// Condition (c) only depends on the pair of cosets (g<w>, h<w>) and not on the
// choice of generator w: even powers of w fix each coset and odd powers swap
// the two, while odd |w| rules the second branch out entirely. The checker
// therefore scans one representative per coset with the smallest generator;
// an independent quadratic scan over all generators and all ordered pairs
// cross-checks the verdict on groups of order <= 24.

inline const std::set<int>& allowed_orders() {
    static const std::set<int> s{2, 3, 4, 5, 6, 8, 12};
    return s;
}

struct NonNormalCyclic {
    Elt generator = 0;          // smallest generator of the subgroup
    int subgroup_order = 0;
    int normalizer_order = 0;
};

struct CosetWitness {
    Elt w = 0, g = 0, h = 0;
};

struct Lemma6Report {
    std::string group_name;
    int group_order = 0;
    std::vector<NonNormalCyclic> non_normal;
    bool has_non_normal = false;                    // (a)
    bool order_constraint_ok = false;               // (b)
    std::optional<std::pair<Elt, int>> bad_order;   // offending element and its order
    bool coset_condition_ok = false;                // (c)
    std::optional<CosetWitness> witness;
    bool satisfies = false;
    bool cross_checked = false;  // quadratic all-generators scan ran and agreed
};

namespace detail {

inline bool coset_condition_fast(const FiniteGroup& G, const Subgroup& W, Elt w,
                                 const Subgroup& N, std::optional<CosetWitness>& witness) {
    // one representative per <w>-coset outside N; N is a union of such cosets
    std::vector<Elt> reps;
    for (Elt r : left_transversal(G, W))
        if (!N.contains(r)) reps.push_back(r);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            Elt g = reps[i], h = reps[j];
            bool wg_in_hW = W.contains(G.mul(G.inverse(h), G.mul(w, g)));
            bool wh_in_gW = W.contains(G.mul(G.inverse(g), G.mul(w, h)));
            if (!(wg_in_hW && wh_in_gW)) {
                witness = CosetWitness{w, g, h};
                return false;
            }
        }
    return true;
}

inline bool coset_condition_full(const FiniteGroup& G, const Subgroup& W, const Subgroup& N) {
    std::vector<Elt> outside;
    for (Elt g = 0; g < G.order(); ++g)
        if (!N.contains(g)) outside.push_back(g);
    for (Elt w : W.elements()) {
        if (subgroup_generated(G, {w}).elements() != W.elements()) continue;
        for (Elt g : outside)
            for (Elt h : outside) {
                if (W.contains(G.mul(G.inverse(h), g))) continue;  // g<w> = h<w>
                bool c1 = W.contains(G.mul(G.inverse(h), G.mul(w, g)));
                bool c2 = W.contains(G.mul(G.inverse(g), G.mul(w, h)));
                if (!(c1 && c2)) return false;
            }
    }
    return true;
}

}  // namespace detail

inline Lemma6Report lemma6_check(const FiniteGroup& G, const std::string& name = "") {
    Lemma6Report rep;
    rep.group_name = name;
    rep.group_order = G.order();

    rep.order_constraint_ok = true;
    for (Elt g = 1; g < G.order(); ++g) {
        int o = G.element_order(g);
        if (!allowed_orders().count(o)) {
            rep.order_constraint_ok = false;
            rep.bad_order = {g, o};
            break;
        }
    }

    auto cyclics = cyclic_subgroups(G);
    std::vector<std::pair<Subgroup, Elt>> non_normal;  // subgroup, smallest generator
    for (const auto& W : cyclics) {
        if (W.order() == 1 || is_normal(G, W)) continue;
        Elt gen = -1;
        for (Elt x : W.elements())
            if (subgroup_generated(G, {x}).elements() == W.elements()) {
                gen = x;
                break;
            }
        non_normal.push_back({W, gen});
        Subgroup N = normalizer_of_cyclic(G, gen);
        rep.non_normal.push_back({gen, W.order(), N.order()});
    }
    rep.has_non_normal = !non_normal.empty();

    rep.coset_condition_ok = true;
    for (const auto& [W, gen] : non_normal) {
        Subgroup N = normalizer_of_cyclic(G, gen);
        if (!detail::coset_condition_fast(G, W, gen, N, rep.witness)) {
            rep.coset_condition_ok = false;
            break;
        }
    }

    if (G.order() <= 24) {
        bool full_ok = true;
        for (const auto& [W, gen] : non_normal) {
            Subgroup N = normalizer_of_cyclic(G, gen);
            if (!detail::coset_condition_full(G, W, N)) {
                full_ok = false;
                break;
            }
        }
        if (full_ok != rep.coset_condition_ok)
            throw error("internal: coset condition scans disagree on " +
                        (name.empty() ? std::string("group") : name));
        rep.cross_checked = true;
    }

    rep.satisfies = rep.has_non_normal && rep.order_constraint_ok && rep.coset_condition_ok;
    return rep;
}

// Consequences of the hypotheses, re-verified mechanically on a group that
// satisfies them: for each non-normal cyclic W with normalizer N,
// [G:N] <= 3; index 3 forces N = W; index 2 forces [N:W] = 2 and [G:W] = 4;
// and the whole group has order at most 48.
struct Lemma6Corollaries {
    bool all_hold = false;
    std::vector<std::string> violations;
};

inline Lemma6Corollaries lemma6_structure_corollaries(const FiniteGroup& G) {
    Lemma6Report rep = lemma6_check(G);
    if (!rep.satisfies) throw error("structure corollaries assume the hypotheses hold");
    Lemma6Corollaries out;
    out.all_hold = true;
    auto fail = [&](const std::string& msg) {
        out.all_hold = false;
        out.violations.push_back(msg);
    };
    if (G.order() > 48) fail("group order exceeds 48");
    for (const auto& d : rep.non_normal) {
        int n = G.order();
        int idxN = n / d.normalizer_order;
        std::string tag = "<" + G.element_name(d.generator) + ">";
        if (idxN > 3) fail("normalizer of " + tag + " has index " + std::to_string(idxN));
        if (idxN == 3 && d.normalizer_order != d.subgroup_order)
            fail("index-3 normalizer of " + tag + " is larger than the subgroup");
        if (idxN == 2) {
            if (d.normalizer_order != 2 * d.subgroup_order)
                fail("index-2 normalizer of " + tag + " is not twice the subgroup");
            if (n != 4 * d.subgroup_order)
                fail(tag + " does not have index 4");
        }
    }
    return out;
}

struct Lemma6SearchResult {
    std::vector<Lemma6Report> satisfying;               // ordered by (order, name)
    std::vector<std::vector<std::string>> iso_classes;  // names grouped by isomorphism
};

inline Lemma6SearchResult lemma6_search(const Catalog& cat) {
    Lemma6SearchResult res;
    std::vector<const CatalogEntry*> hits;
    for (const auto& e : cat.entries()) {
        Lemma6Report rep = lemma6_check(*e.group, e.name);
        if (rep.satisfies) {
            res.satisfying.push_back(std::move(rep));
            hits.push_back(&e);
        }
    }
    std::vector<bool> placed(hits.size(), false);
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (placed[i]) continue;
        std::vector<std::string> cls{hits[i]->name};
        placed[i] = true;
        for (std::size_t j = i + 1; j < hits.size(); ++j)
            if (!placed[j] && is_isomorphic(*hits[i]->group, *hits[j]->group)) {
                cls.push_back(hits[j]->name);
                placed[j] = true;
            }
        res.iso_classes.push_back(std::move(cls));
    }
    return res;
}

}  // namespace grkit
