#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annihilator.hpp"
#include "construct.hpp"
#include "core.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "isomorphism.hpp"
#include "ring.hpp"

namespace grkit {

// Free rank of the unit group of ZG modulo the trivial units, for finite
// abelian G: (|G| + 1 + t2 - 2l)/2 with t2 the involution count and l the
// number of cyclic subgroups.
struct RankReport {
    int group_order = 0;
    int involutions = 0;
    int cyclic_subgroup_count = 0;
    long long rank = 0;
};

inline RankReport rank_formula(const FiniteGroup& G) {
    if (!G.is_abelian()) throw error("the rank formula applies to abelian groups only");
    RankReport r;
    r.group_order = G.order();
    r.involutions = involution_count(G);
    r.cyclic_subgroup_count = static_cast<int>(cyclic_subgroups(G).size());
    long long num = static_cast<long long>(r.group_order) + 1 + r.involutions -
                    2LL * r.cyclic_subgroup_count;
    if (num % 2 != 0)
        throw error("internal: rank numerator " + std::to_string(num) + " is odd");
    r.rank = num / 2;
    return r;
}

// Which clause of the characterization a finite group falls under:
//   i    C5, C8, C12, or finite abelian of exponent 2, 3, 4, or 6
//   ii   Hamiltonian 2-group
//   iii  H_{3,2}, H_{3,4}, H_{4,2}, H_{4,4}
//   none anything else (unit groups with a free abelian pair, etc.)
// The trivial group is labeled clause i with a flag: its exponent 1 is not
// literally in {2,3,4,6} but every unit is trivial.
struct TheoremOneClass {
    enum class Label { clause_i, clause_ii, clause_iii, none };
    Label label = Label::none;
    bool trivial_group = false;
    std::string detail;

    static const char* label_name(Label l) {
        switch (l) {
            case Label::clause_i: return "i";
            case Label::clause_ii: return "ii";
            case Label::clause_iii: return "iii";
            default: return "none";
        }
    }
};

inline TheoremOneClass classify_theorem1(const FiniteGroup& G) {
    TheoremOneClass out;
    int n = G.order();
    if (n == 1) {
        out.label = TheoremOneClass::Label::clause_i;
        out.trivial_group = true;
        out.detail = "trivial group (exponent 1)";
        return out;
    }
    bool cyclic = false;
    for (Elt g = 0; g < n && !cyclic; ++g) cyclic = G.element_order(g) == n;
    if (cyclic && (n == 5 || n == 8 || n == 12)) {
        out.label = TheoremOneClass::Label::clause_i;
        out.detail = "cyclic of order " + std::to_string(n);
        return out;
    }
    if (G.is_abelian()) {
        long long e = exponent(G);
        if (e == 2 || e == 3 || e == 4 || e == 6) {
            out.label = TheoremOneClass::Label::clause_i;
            out.detail = "abelian of exponent " + std::to_string(e);
            return out;
        }
        out.detail = "abelian, exponent " + std::to_string(e) + " outside {2,3,4,6}";
        return out;
    }
    if (is_hamiltonian(G)) {
        bool two_power = (n & (n - 1)) == 0;
        if (two_power) {
            out.label = TheoremOneClass::Label::clause_ii;
            out.detail = "Hamiltonian 2-group of order " + std::to_string(n);
            return out;
        }
        out.detail = "Hamiltonian but not a 2-group";
        return out;
    }
    struct Target {
        int s, m;
        int order;
    };
    for (Target t : {Target{3, 2, 6}, Target{3, 4, 12}, Target{4, 2, 8}, Target{4, 4, 16}}) {
        if (n != t.order) continue;
        FiniteGroup H = construct(GroupSpec{HsnSpec{t.s, t.m}});
        if (is_isomorphic(G, H)) {
            out.label = TheoremOneClass::Label::clause_iii;
            out.detail = "isomorphic to H" + std::to_string(t.s) + "," + std::to_string(t.m);
            return out;
        }
    }
    out.detail = "outside every clause";
    return out;
}

}  // namespace grkit
