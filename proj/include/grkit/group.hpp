#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace grkit {

// A finite group given by its full multiplication table, elements 0..n-1 with
// 0 the identity. The table is validated at construction: identity row/column,
// row and column cancellation, and associativity (the full triple loop up to
// order 64, a fixed-seed sample beyond that).
class FiniteGroup {
public:
    static constexpr int max_order = 4096;

    explicit FiniteGroup(const std::vector<std::vector<Elt>>& rows,
                         std::map<std::string, Elt> generator_labels = {})
        : labels_(std::move(generator_labels)) {
        n_ = static_cast<int>(rows.size());
        if (n_ == 0) throw error("group table is empty");
        if (n_ > max_order)
            throw error("group of order " + std::to_string(n_) +
                        " exceeds the table-representation cap of " + std::to_string(max_order));
        table_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i) {
            if (static_cast<int>(rows[i].size()) != n_)
                throw error("table row " + std::to_string(i) + " has wrong length");
            for (int j = 0; j < n_; ++j) {
                Elt v = rows[i][j];
                if (v < 0 || v >= n_)
                    throw error("table entry out of range at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
                table_[static_cast<std::size_t>(i) * n_ + j] = v;
            }
        }
        check_axioms();
        build_caches();
        for (const auto& [name, g] : labels_) {
            if (g < 0 || g >= n_)
                throw error("generator label '" + name + "' refers to element " +
                            std::to_string(g) + ", out of range");
        }
        if (!labels_.empty()) build_names();
    }

    int order() const noexcept { return n_; }
    Elt mul(Elt a, Elt b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elt inverse(Elt g) const { return inverse_[g]; }
    // x g x^-1
    Elt conjugate(Elt g, Elt x) const { return mul(mul(x, g), inverse(x)); }

    Elt power(Elt g, long long k) const {
        Elt base = k >= 0 ? g : inverse(g);
        unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                      : -static_cast<unsigned long long>(k);
        Elt acc = 0;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    int element_order(Elt g) const { return orders_[g]; }
    const std::vector<int>& element_orders() const { return orders_; }
    bool is_abelian() const { return abelian_; }

    const std::map<std::string, Elt>& generator_labels() const { return labels_; }

    // Generators in label order; empty when the group was built without labels.
    std::vector<Elt> generators() const {
        std::vector<Elt> out;
        for (const auto& [name, g] : labels_) out.push_back(g);
        return out;
    }

    // Shortest word in the labeled generators ("a^2 b", "1" for the identity).
    // Falls back to "g<i>" when the group carries no labels.
    std::string element_name(Elt g) const {
        if (g < 0 || g >= n_) throw error("element index out of range");
        if (!names_.empty()) return names_[g];
        return g == 0 ? std::string("1") : "g" + std::to_string(g);
    }

    const std::vector<Elt>& flat_table() const { return table_; }

    bool same_table(const FiniteGroup& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

private:
    void check_axioms() const {
        for (int g = 0; g < n_; ++g) {
            if (mul(0, g) != g || mul(g, 0) != g)
                throw error("element 0 is not a two-sided identity");
        }
        std::vector<char> seen(n_);
        for (int a = 0; a < n_; ++a) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int b = 0; b < n_; ++b) {
                Elt v = mul(a, b);
                if (seen[v]) throw error("row " + std::to_string(a) + " is not a permutation");
                seen[v] = 1;
            }
        }
        for (int b = 0; b < n_; ++b) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int a = 0; a < n_; ++a) {
                Elt v = mul(a, b);
                if (seen[v]) throw error("column " + std::to_string(b) + " is not a permutation");
                seen[v] = 1;
            }
        }
        auto check_triple = [&](int a, int b, int c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw error("associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
        };
        if (n_ <= 64) {
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    for (int c = 0; c < n_; ++c) check_triple(a, b, c);
        } else {
            std::mt19937 rng(0x5eed);
            std::uniform_int_distribution<int> pick(0, n_ - 1);
            for (int t = 0; t < 50000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
        }
    }

    void build_caches() {
        inverse_.assign(n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == 0) {
                    inverse_[a] = b;
                    break;
                }
        orders_.assign(n_, 0);
        for (int g = 0; g < n_; ++g) {
            Elt x = g;
            int k = 1;
            while (x != 0) {
                x = mul(x, g);
                ++k;
            }
            orders_[g] = k;
        }
        abelian_ = true;
        for (int a = 0; a < n_ && abelian_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) {
                    abelian_ = false;
                    break;
                }
    }

    // BFS from the identity over labeled generators and their inverses, so each
    // element gets a shortest word. Ties resolve by label order, positive
    // letters before inverses.
    void build_names() {
        struct Letter {
            std::string label;
            Elt g;
            int sign;
        };
        std::vector<Letter> letters;
        for (const auto& [name, g] : labels_) letters.push_back({name, g, 1});
        for (const auto& [name, g] : labels_) letters.push_back({name, inverse_[g], -1});

        std::vector<int> from(n_, -1), via(n_, -1);
        std::queue<Elt> q;
        q.push(0);
        from[0] = 0;
        while (!q.empty()) {
            Elt x = q.front();
            q.pop();
            for (int li = 0; li < static_cast<int>(letters.size()); ++li) {
                Elt y = mul(x, letters[li].g);
                if (from[y] == -1) {
                    from[y] = x;
                    via[y] = li;
                    q.push(y);
                }
            }
        }
        names_.assign(n_, std::string());
        for (int g = 0; g < n_; ++g) {
            if (from[g] == -1) {
                // labels do not generate the group; fall back to indices
                names_.clear();
                return;
            }
            std::vector<int> word;
            for (Elt x = g; x != 0; x = from[x]) word.push_back(via[x]);
            std::reverse(word.begin(), word.end());
            if (word.empty()) {
                names_[g] = "1";
                continue;
            }
            std::string s;
            std::size_t i = 0;
            while (i < word.size()) {
                std::size_t j = i;
                while (j < word.size() && word[j] == word[i]) ++j;
                const Letter& L = letters[word[i]];
                long long exp = static_cast<long long>(j - i) * L.sign;
                if (!s.empty()) s += ' ';
                s += L.label;
                if (exp != 1) s += "^" + std::to_string(exp);
                i = j;
            }
            names_[g] = s;
        }
    }

    int n_ = 0;
    std::vector<Elt> table_;
    std::vector<Elt> inverse_;
    std::vector<int> orders_;
    std::vector<std::string> names_;
    std::map<std::string, Elt> labels_;
    bool abelian_ = false;
};

// A subgroup is stored as a sorted element list; the constructor verifies
// closure, identity, and inverses.
class Subgroup {
public:
    Subgroup(const FiniteGroup& parent, std::vector<Elt> elements)
        : parent_(&parent), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        if (elements_.empty() || elements_[0] != 0)
            throw error("subgroup does not contain the identity");
        for (Elt g : elements_) {
            if (g < 0 || g >= parent.order()) throw error("subgroup element out of range");
            if (!contains_sorted(parent.inverse(g)))
                throw error("subgroup not closed under inverses");
            for (Elt h : elements_)
                if (!contains_sorted(parent.mul(g, h)))
                    throw error("subgroup not closed under multiplication");
        }
    }

    const FiniteGroup& parent() const { return *parent_; }
    const std::vector<Elt>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    bool contains(Elt g) const { return contains_sorted(g); }

    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && elements_ == other.elements_;
    }

private:
    bool contains_sorted(Elt g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g);
    }

    const FiniteGroup* parent_;
    std::vector<Elt> elements_;
};

inline std::vector<Elt> closure_of(const FiniteGroup& G, const std::vector<Elt>& gens) {
    std::set<Elt> s{0};
    std::vector<Elt> work{0};
    for (Elt g : gens)
        if (s.insert(g).second) work.push_back(g);
    // products of everything seen so far, until stable
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < work.size(); ++j) {
            for (Elt p : {G.mul(work[i], work[j]), G.mul(work[j], work[i])}) {
                if (s.insert(p).second) work.push_back(p);
            }
        }
    }
    return {s.begin(), s.end()};
}

inline Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elt>& gens) {
    return Subgroup(G, closure_of(G, gens));
}

inline Subgroup cyclic_subgroup(const FiniteGroup& G, Elt w) {
    std::vector<Elt> elts;
    Elt x = 0;
    do {
        elts.push_back(x);
        x = G.mul(x, w);
    } while (x != 0);
    return Subgroup(G, std::move(elts));
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G, {0}); }

inline Subgroup whole_group(const FiniteGroup& G) {
    std::vector<Elt> all(G.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(G, std::move(all));
}

// All distinct cyclic subgroups, ordered by their sorted element lists.
inline std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G) {
    std::set<std::vector<Elt>> seen;
    for (Elt g = 0; g < G.order(); ++g) seen.insert(cyclic_subgroup(G, g).elements());
    std::vector<Subgroup> out;
    for (const auto& e : seen) out.emplace_back(G, e);
    return out;
}

inline int involution_count(const FiniteGroup& G) {
    int c = 0;
    for (Elt g = 0; g < G.order(); ++g)
        if (G.element_order(g) == 2) ++c;
    return c;
}

inline long long exponent(const FiniteGroup& G) {
    long long e = 1;
    for (Elt g = 0; g < G.order(); ++g) e = std::lcm(e, static_cast<long long>(G.element_order(g)));
    return e;
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& H) {
    for (Elt g = 0; g < G.order(); ++g)
        for (Elt h : H.elements())
            if (!H.contains(G.conjugate(h, g))) return false;
    return true;
}

inline Subgroup centralizer(const FiniteGroup& G, Elt g) {
    std::vector<Elt> elts;
    for (Elt x = 0; x < G.order(); ++x)
        if (G.mul(x, g) == G.mul(g, x)) elts.push_back(x);
    return Subgroup(G, std::move(elts));
}

inline Subgroup center(const FiniteGroup& G) {
    std::vector<Elt> elts;
    for (Elt x = 0; x < G.order(); ++x) {
        bool central = true;
        for (Elt g = 0; g < G.order() && central; ++g) central = G.mul(x, g) == G.mul(g, x);
        if (central) elts.push_back(x);
    }
    return Subgroup(G, std::move(elts));
}

// N(<w>): x normalizes the cyclic subgroup <w> iff x w x^-1 lands back in <w>,
// conjugation being an automorphism of the same finite order.
inline Subgroup normalizer_of_cyclic(const FiniteGroup& G, Elt w) {
    Subgroup W = cyclic_subgroup(G, w);
    std::vector<Elt> elts;
    for (Elt x = 0; x < G.order(); ++x)
        if (W.contains(G.conjugate(w, x))) elts.push_back(x);
    return Subgroup(G, std::move(elts));
}

// Representatives of the left cosets tH, identity's coset first, each
// representative the smallest element of its coset.
inline std::vector<Elt> left_transversal(const FiniteGroup& G, const Subgroup& H) {
    std::vector<char> covered(G.order(), 0);
    std::vector<Elt> reps;
    for (Elt t = 0; t < G.order(); ++t) {
        if (covered[t]) continue;
        reps.push_back(t);
        for (Elt h : H.elements()) covered[G.mul(t, h)] = 1;
    }
    return reps;
}

// Full subgroup lattice by closure extension: repeatedly adjoin one element to
// each known subgroup. Guarded to order <= 64; the lattice explodes beyond.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
    if (G.order() > 64)
        throw error("subgroup lattice enumeration is capped at order 64 (got " +
                    std::to_string(G.order()) + ")");
    std::set<std::vector<Elt>> known;
    std::vector<std::vector<Elt>> frontier;
    std::vector<Elt> triv{0};
    known.insert(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        std::vector<std::vector<Elt>> next;
        for (const auto& h : frontier) {
            for (Elt g = 1; g < G.order(); ++g) {
                if (std::binary_search(h.begin(), h.end(), g)) continue;
                std::vector<Elt> gens = h;
                gens.push_back(g);
                auto k = closure_of(G, gens);
                if (known.insert(k).second) next.push_back(std::move(k));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (const auto& e : known) out.emplace_back(G, e);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

// Hamiltonian: nonabelian with every subgroup normal. Every subgroup is
// generated by cyclic ones, so checking the cyclic subgroups suffices.
inline bool is_hamiltonian(const FiniteGroup& G) {
    if (G.is_abelian()) return false;
    for (const Subgroup& c : cyclic_subgroups(G))
        if (!is_normal(G, c)) return false;
    return true;
}

}  // namespace grkit
