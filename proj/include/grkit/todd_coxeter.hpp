#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "core.hpp"
#include "group.hpp"
#include "presentation.hpp"

namespace grkit {

namespace detail {

// Coset enumeration over the trivial subgroup, HLT strategy with standard
// coincidence processing. Columns come in pairs: 2g is generator g acting on
// the right, 2g+1 its inverse. max_rows bounds the total number of cosets ever
// defined (a workspace bound, in the style of the classical tools).
class CosetEnumerator {
public:
    CosetEnumerator(const Presentation& p, int max_rows)
        : ngens_(static_cast<int>(p.generators.size())), max_rows_(max_rows) {
        if (max_rows_ < 1) throw error("coset budget must be at least 1");
        for (const auto& r : p.relators) {
            std::vector<int> cols;
            cols.reserve(r.size());
            for (int letter : r) cols.push_back(letter_col(letter));
            relators_.push_back(std::move(cols));
        }
        new_row();
    }

    void run() {
        for (std::size_t c = 0; c < rows_.size(); ++c) {
            if (!alive(static_cast<int>(c))) continue;
            for (const auto& rel : relators_) {
                scan_and_fill(static_cast<int>(c), rel);
                if (!alive(static_cast<int>(c))) break;
            }
            if (!alive(static_cast<int>(c))) continue;
            for (int col = 0; col < 2 * ngens_; ++col) {
                if (entry(static_cast<int>(c), col) < 0) define(static_cast<int>(c), col);
            }
        }
        // The coincidence queue can transiently clear mirror entries; one
        // verification sweep catches any row left incomplete and re-runs.
        if (!closed()) run();
    }

    // Representative live cosets, renumbered by BFS from coset 0 over columns
    // in order. Returns the multiplication table plus generator images.
    FiniteGroup build_group(const std::map<std::string, Elt>* label_hint,
                            const std::vector<std::string>& gen_names) const {
        std::vector<int> newidx(rows_.size(), -1);
        std::vector<int> bfs_parent, bfs_col, order;
        order.push_back(0);
        newidx[0] = 0;
        bfs_parent.push_back(-1);
        bfs_col.push_back(-1);
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            int c = order[qi];
            for (int col = 0; col < 2 * ngens_; ++col) {
                int t = rep(entry(c, col));
                if (newidx[t] == -1) {
                    newidx[t] = static_cast<int>(order.size());
                    order.push_back(t);
                    bfs_parent.push_back(newidx[c]);
                    bfs_col.push_back(col);
                }
            }
        }
        int n = static_cast<int>(order.size());
        if (n > FiniteGroup::max_order)
            throw error("enumeration closed with " + std::to_string(n) +
                        " cosets, past the table-representation cap of " +
                        std::to_string(FiniteGroup::max_order));

        // standardized coset table
        std::vector<std::vector<int>> std_table(n, std::vector<int>(2 * ngens_));
        for (int j = 0; j < n; ++j)
            for (int col = 0; col < 2 * ngens_; ++col)
                std_table[j][col] = newidx[rep(entry(order[j], col))];

        // Coset j is reached from 0 by a word w_j, so it names the element w_j.
        // M[g][j] = g * w_j unrolls along the BFS tree.
        std::vector<std::vector<Elt>> M(n, std::vector<Elt>(n));
        for (int g = 0; g < n; ++g) {
            M[g][0] = g;
            for (int j = 1; j < n; ++j) M[g][j] = std_table[M[g][bfs_parent[j]]][bfs_col[j]];
        }

        std::map<std::string, Elt> labels;
        if (label_hint) {
            labels = *label_hint;
        } else {
            for (int g = 0; g < ngens_; ++g) labels[gen_names[g]] = std_table[0][2 * g];
        }
        return FiniteGroup(M, std::move(labels));
    }

    int live_count() const {
        int c = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (alive(static_cast<int>(i))) ++c;
        return c;
    }

private:
    static int letter_col(int letter) {
        int g = (letter > 0 ? letter : -letter) - 1;
        return letter > 0 ? 2 * g : 2 * g + 1;
    }
    static int inv_col(int col) { return col ^ 1; }

    int entry(int c, int col) const { return rows_[c][col]; }
    void set_entry(int c, int col, int v) { rows_[c][col] = v; }
    bool alive(int c) const { return p_[c] == c; }

    int rep(int c) const {
        while (p_[c] != c) c = p_[c];
        return c;
    }

    int new_row() {
        if (static_cast<int>(rows_.size()) >= max_rows_)
            throw budget_error("coset enumeration exceeded its budget of " +
                               std::to_string(max_rows_) +
                               " cosets; the presentation may define a large or infinite group");
        rows_.emplace_back(2 * ngens_, -1);
        p_.push_back(static_cast<int>(rows_.size()) - 1);
        return static_cast<int>(rows_.size()) - 1;
    }

    int define(int c, int col) {
        int d = new_row();
        set_entry(c, col, d);
        set_entry(d, inv_col(col), c);
        return d;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        queue_.push_back(b);
    }

    void process_coincidences() {
        while (!queue_.empty()) {
            int e = queue_.front();
            queue_.pop_front();
            for (int col = 0; col < 2 * ngens_; ++col) {
                int f = entry(e, col);
                if (f < 0) continue;
                set_entry(e, col, -1);
                if (entry(f, inv_col(col)) == e) set_entry(f, inv_col(col), -1);
                int e1 = rep(e), f1 = rep(f);
                if (entry(e1, col) >= 0) {
                    merge(f1, entry(e1, col));
                } else if (entry(f1, inv_col(col)) >= 0) {
                    merge(e1, entry(f1, inv_col(col)));
                } else {
                    set_entry(e1, col, f1);
                    set_entry(f1, inv_col(col), e1);
                }
            }
        }
    }

    void scan_and_fill(int c, const std::vector<int>& rel) {
        // f and b stay representatives throughout: stored targets may be stale
        // pointers at merged cosets, so every hop runs through rep().
        int f = c, b = c;
        int i = 0, j = static_cast<int>(rel.size()) - 1;
        while (true) {
            while (i <= j && entry(f, rel[i]) >= 0) f = rep(entry(f, rel[i++]));
            if (i > j) {
                if (f != b) {
                    merge(f, b);
                    process_coincidences();
                }
                return;
            }
            while (j >= i && entry(b, inv_col(rel[j])) >= 0) b = rep(entry(b, inv_col(rel[j--])));
            if (j < i) {
                merge(f, b);
                process_coincidences();
                return;
            }
            if (j == i) {
                set_entry(f, rel[i], b);
                set_entry(b, inv_col(rel[i]), f);
                return;
            }
            define(f, rel[i]);
        }
    }

    bool closed() const {
        for (std::size_t c = 0; c < rows_.size(); ++c) {
            if (!alive(static_cast<int>(c))) continue;
            for (int col = 0; col < 2 * ngens_; ++col) {
                int t = entry(static_cast<int>(c), col);
                if (t < 0) return false;
            }
            for (const auto& rel : relators_) {
                int x = static_cast<int>(c);
                for (int col : rel) {
                    x = entry(x, col);
                    if (x < 0) return false;
                    x = rep(x);
                }
                if (x != static_cast<int>(c)) return false;
            }
        }
        return true;
    }

    int ngens_;
    int max_rows_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> p_;
    std::deque<int> queue_;
};

}  // namespace detail

// Enumerate the cosets of the trivial subgroup, i.e. compute the regular
// representation, and package it as a FiniteGroup whose generator labels point
// at the presented generators' images. Throws budget_error when more than
// max_cosets rows would be defined; that is a budget verdict, not a claim that
// the group is infinite.
inline FiniteGroup coset_enumerate(const Presentation& p, int max_cosets = 100000) {
    if (p.generators.empty()) throw error("presentation has no generators");
    detail::CosetEnumerator tc(p, max_cosets);
    tc.run();
    return tc.build_group(nullptr, p.generators);
}

}  // namespace grkit
