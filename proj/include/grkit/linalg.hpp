#pragma once

#include <optional>
#include <vector>

#include "core.hpp"
#include "ring.hpp"

namespace grkit {

template <Field F>
struct DenseMatrix {
    using scalar = typename F::value_type;

    DenseMatrix(F field_, int rows_, int cols_)
        : field(std::move(field_)), rows(rows_), cols(cols_),
          a(static_cast<std::size_t>(rows_) * cols_, field.zero()) {
        if (rows_ < 0 || cols_ < 0) throw error("matrix dimensions must be nonnegative");
    }

    scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    F field;
    int rows, cols;
    std::vector<scalar> a;
};

// Reduced row echelon form in place. Returns the rank; pivot column indices go
// to *pivots when asked for.
template <Field F>
int rref_in_place(DenseMatrix<F>& m, std::vector<int>* pivots = nullptr) {
    const F& f = m.field;
    int r = 0;
    if (pivots) pivots->clear();
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        auto inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

template <Field F>
int rank(DenseMatrix<F> m) {
    return rref_in_place(m);
}

// Canonical basis of {x : A x = 0}: one vector per free column, in ascending
// free-column order, with a 1 in the free coordinate.
template <Field F>
std::vector<std::vector<typename F::value_type>> right_kernel_basis(DenseMatrix<F> m) {
    const F f = m.field;
    std::vector<int> pivots;
    int r = rref_in_place(m, &pivots);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<typename F::value_type>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::value_type> v(m.cols, f.zero());
        v[c] = f.one();
        for (int i = 0; i < r; ++i) v[pivots[i]] = f.neg(m.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Membership of v in the row space of an already-reduced matrix.
template <Field F>
bool in_row_space(const DenseMatrix<F>& rrefm, const std::vector<int>& pivots,
                  std::vector<typename F::value_type> v) {
    const F& f = rrefm.field;
    if (static_cast<int>(v.size()) != rrefm.cols) throw error("vector length mismatch");
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        auto c = v[pivots[i]];
        if (f.is_zero(c)) continue;
        for (int j = 0; j < rrefm.cols; ++j)
            v[j] = f.sub(v[j], f.mul(c, rrefm.at(static_cast<int>(i), j)));
    }
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

// One solution of A x = b, or nullopt if inconsistent. Free variables are 0.
template <Field F>
std::optional<std::vector<typename F::value_type>> solve(const DenseMatrix<F>& A,
                                                         const std::vector<typename F::value_type>& b) {
    const F f = A.field;
    if (static_cast<int>(b.size()) != A.rows) throw error("rhs length mismatch");
    DenseMatrix<F> aug(f, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> pivots;
    int r = rref_in_place(aug, &pivots);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<typename F::value_type> x(A.cols, f.zero());
    for (int i = 0; i < r; ++i) x[pivots[i]] = aug.at(i, A.cols);
    return x;
}

}  // namespace grkit
