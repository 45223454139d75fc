#pragma once

#include <vector>

#include "core.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "linalg.hpp"
#include "ring.hpp"

namespace grkit {

// Matrix of z |-> z*x in the group basis: column g holds the coefficient
// vector of g*x, so vec(z*x) = A vec(z).
template <Field F>
DenseMatrix<F> right_mul_matrix(const GroupRingElement<F>& x) {
    const FiniteGroup& G = x.group();
    int n = G.order();
    DenseMatrix<F> A(x.ring(), n, n);
    for (Elt g = 0; g < n; ++g)
        for (const auto& [h, c] : x.coeffs())
            A.at(G.mul(g, h), g) = A.field.add(A.at(G.mul(g, h), g), c);
    return A;
}

// Matrix of z |-> x*z: column g holds the coefficient vector of x*g.
template <Field F>
DenseMatrix<F> left_mul_matrix(const GroupRingElement<F>& x) {
    const FiniteGroup& G = x.group();
    int n = G.order();
    DenseMatrix<F> A(x.ring(), n, n);
    for (Elt g = 0; g < n; ++g)
        for (const auto& [h, c] : x.coeffs())
            A.at(G.mul(h, g), g) = A.field.add(A.at(G.mul(h, g), g), c);
    return A;
}

template <Field F>
struct AnnihilatorBasis {
    std::vector<GroupRingElement<F>> basis;
    int dimension = 0;
};

namespace detail {

template <Field F>
AnnihilatorBasis<F> kernel_to_basis(const FiniteGroup& G, const F& f,
                                    const std::vector<std::vector<typename F::value_type>>& kern) {
    AnnihilatorBasis<F> out;
    for (const auto& v : kern) out.basis.push_back(from_dense(G, f, v));
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

}  // namespace detail

// {z in F[G] : z * x = 0}. Every returned basis element is re-verified to
// annihilate x before the basis is handed back.
template <Field F>
AnnihilatorBasis<F> left_annihilator(const GroupRingElement<F>& x) {
    auto A = right_mul_matrix(x);
    auto out = detail::kernel_to_basis(x.group(), x.ring(), right_kernel_basis(std::move(A)));
    for (const auto& z : out.basis)
        if (!mul(z, x).is_zero()) throw error("internal: annihilator basis element fails to annihilate");
    return out;
}

// {z : z * (h - 1) = 0 for every h in H}, the left annihilator of the right
// ideal generated by {h - 1}. For the trivial subgroup the constraint set is
// empty and the annihilator is all of F[G].
template <Field F>
AnnihilatorBasis<F> left_annihilator_of_right_ideal(const FiniteGroup& G, const Subgroup& H,
                                                    F field) {
    if (&H.parent() != &G) throw error("subgroup belongs to a different group");
    int n = G.order();
    std::vector<Elt> hs;
    for (Elt h : H.elements())
        if (h != 0) hs.push_back(h);
    DenseMatrix<F> A(field, n * static_cast<int>(hs.size()), n);
    for (std::size_t bi = 0; bi < hs.size(); ++bi) {
        // block bi: z * (h - 1), i.e. row g*h gains z_g, row g loses z_g
        int base = static_cast<int>(bi) * n;
        for (Elt g = 0; g < n; ++g) {
            A.at(base + G.mul(g, hs[bi]), g) = field.add(A.at(base + G.mul(g, hs[bi]), g), field.one());
            A.at(base + g, g) = field.sub(A.at(base + g, g), field.one());
        }
    }
    auto out = detail::kernel_to_basis(G, field, right_kernel_basis(std::move(A)));
    for (const auto& z : out.basis)
        for (Elt h : hs) {
            auto diff = sub(mul(z, GroupRingElement<F>::of_element(G, field, h)), z);
            if (!diff.is_zero())
                throw error("internal: ideal annihilator basis element fails to annihilate");
        }
    return out;
}

}  // namespace grkit
