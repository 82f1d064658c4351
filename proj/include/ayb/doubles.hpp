#pragma once

#include "ayb/bialgebra.hpp"
#include "ayb/dendriform.hpp"
#include "ayb/forms.hpp"

namespace ayb {

// 2n-dimensional algebra on A ⊕ A* with its distinguished bilinear form.
// Indices 0..n-1 are A, n..2n-1 are A*.
template <typename R>
struct DoubleAlgebra {
    Algebra<R> algebra;
    BilinearForm<R> form;

    // provenance
    std::string construction;
    std::string base_id;
    std::string solution_id;

    int half_dim() const { return algebra.dim / 2; }
};

namespace detail {

template <typename R>
std::vector<std::string> double_basis(const std::vector<std::string>& base) {
    std::vector<std::string> names = base;
    for (auto& b : base) names.push_back(b + "*");
    return names;
}

} // namespace detail

// Frobenius double from an antisymmetric AYBE solution (the products of
// Prop. pro2.4.4):
//   a* ∗ b* = R*(r(a*))b* + L*(r(b*))a*
//   x  ∗ a* = x·r(a*) - r(R*(x)a*) + R*(x)a*
//   a* ∗ x  = r(a*)·x - r(L*(x)a*) + L*(x)a*
template <typename R>
DoubleAlgebra<R> frobenius_double_from_r(const Algebra<R>& A, const TensorElement<R>& r) {
    if (!is_antisymmetric(r))
        throw NotAntisymmetric("frobenius_double_from_r needs an antisymmetric r");
    if (!aybe_residual(A, r).is_zero())
        throw NotAYBESolution("r does not solve the AYBE");

    const int n = A.dim;
    auto out = Algebra<R>::zeros(A.ring, detail::double_basis<R>(A.basis));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.cc(i, j, k) = A.cc(i, j, k);

    for (int i = 0; i < n; ++i) {
        auto ei = A.basis_vec(i);
        auto r_ei = tensor_as_map(A.ring, r, ei);
        for (int j = 0; j < n; ++j) {
            auto ej = A.basis_vec(j);
            auto r_ej = tensor_as_map(A.ring, r, ej);

            // e_i* ∗ e_j*
            auto dual_part = dual_right_rep(A, r_ei).apply(A.ring, ej);
            auto dual_part2 = dual_left_rep(A, r_ej).apply(A.ring, ei);
            for (int k = 0; k < n; ++k)
                out.cc(n + i, n + j, n + k) = dual_part[k] + dual_part2[k];

            // e_i ∗ e_j*
            auto a_part = multiply(A, ei, r_ej);
            auto rsa = dual_right_rep(A, ei).apply(A.ring, ej);
            auto a_part2 = tensor_as_map(A.ring, r, rsa);
            for (int k = 0; k < n; ++k) {
                out.cc(i, n + j, k) = a_part[k] - a_part2[k];
                out.cc(i, n + j, n + k) = rsa[k];
            }

            // e_i* ∗ e_j
            auto b_part = multiply(A, r_ei, ej);
            auto lsa = dual_left_rep(A, ej).apply(A.ring, ei);
            auto b_part2 = tensor_as_map(A.ring, r, lsa);
            for (int k = 0; k < n; ++k) {
                out.cc(n + i, j, k) = b_part[k] - b_part2[k];
                out.cc(n + i, j, n + k) = lsa[k];
            }
        }
    }

    DoubleAlgebra<R> d;
    d.algebra = std::move(out);
    d.form = natural_B(A.ring, n);
    d.construction = "frobenius_from_r";
    return d;
}

// Frobenius double from a matched pair (A, A*):
//   (x + a*) ∗ (y + b*) = (x·y + R*_∘(a*)y + L*_∘(b*)x)
//                       + (a*∘b* + R*_·(x)b* + L*_·(y)a*)
template <typename R>
DoubleAlgebra<R> frobenius_double_from_matched_pair(const Algebra<R>& A,
                                                    const Algebra<R>& Astar) {
    auto mp = check_matched_pair(A, Astar);
    if (!mp.pass()) throw NotMatchedPair(mp.summary());

    const int n = A.dim;
    auto out = Algebra<R>::zeros(A.ring, detail::double_basis<R>(A.basis));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                out.cc(i, j, k) = A.cc(i, j, k);
                out.cc(n + i, n + j, n + k) = Astar.cc(i, j, k);
            }

    for (int i = 0; i < n; ++i) {
        auto ei = A.basis_vec(i);
        for (int j = 0; j < n; ++j) {
            auto ej = A.basis_vec(j);

            // e_i ∗ e_j*: L*_∘(e_j*)e_i + R*_·(e_i)e_j*
            auto a_part = dual_left_rep(Astar, ej).apply(A.ring, ei);
            auto d_part = dual_right_rep(A, ei).apply(A.ring, ej);
            for (int k = 0; k < n; ++k) {
                out.cc(i, n + j, k) = a_part[k];
                out.cc(i, n + j, n + k) = d_part[k];
            }

            // e_i* ∗ e_j: R*_∘(e_i*)e_j + L*_·(e_j)e_i*
            auto a_part2 = dual_right_rep(Astar, ei).apply(A.ring, ej);
            auto d_part2 = dual_left_rep(A, ej).apply(A.ring, ei);
            for (int k = 0; k < n; ++k) {
                out.cc(n + i, j, k) = a_part2[k];
                out.cc(n + i, j, n + k) = d_part2[k];
            }
        }
    }

    DoubleAlgebra<R> d;
    d.algebra = std::move(out);
    d.form = natural_B(A.ring, n);
    d.construction = "frobenius_from_matched_pair";
    return d;
}

// Connes-cocycle double from a symmetric D-equation solution. The dual
// dendriform structure comes from the induced coproducts; the associative
// product on A ⊕ A* is
//   (x + a*) ∗ (y + b*) = (x∗y + R*_≺A*(a*)y + L*_≻A*(b*)x)
//                       + (a*∗b* + R*_≺A(x)b* + L*_≻A(y)a*).
template <typename R>
DoubleAlgebra<R> connes_double_from_r(const DendriformAlgebra<R>& D, const TensorElement<R>& r) {
    if (!is_symmetric(r)) throw NotSymmetric("connes_double_from_r needs a symmetric r");
    if (!d_equation_residual(D, r).is_zero())
        throw NotDSolution("r does not solve the D-equation");

    const int n = D.dim;
    auto A = associated_associative(D);
    auto dual = dual_dendriform(D, r);

    auto out = Algebra<R>::zeros(A.ring, detail::double_basis<R>(A.basis));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                out.cc(i, j, k) = A.cc(i, j, k);
                out.cc(n + i, n + j, n + k) = dual.pc(i, j, k) + dual.sc(i, j, k);
            }

    for (int i = 0; i < n; ++i) {
        auto ei = A.basis_vec(i);
        for (int j = 0; j < n; ++j) {
            auto ej = A.basis_vec(j);

            // e_i ∗ e_j*: L*_≻A*(e_j*)e_i + R*_≺A(e_i)e_j*
            auto a_part = left_succ(dual, dual.basis_vec(j)).transposed().apply(A.ring, ei);
            auto d_part = right_prec(D, ei).transposed().apply(A.ring, ej);
            for (int k = 0; k < n; ++k) {
                out.cc(i, n + j, k) = a_part[k];
                out.cc(i, n + j, n + k) = d_part[k];
            }

            // e_i* ∗ e_j: R*_≺A*(e_i*)e_j + L*_≻A(e_j)e_i*
            auto a_part2 = right_prec(dual, dual.basis_vec(i)).transposed().apply(A.ring, ej);
            auto d_part2 = left_succ(D, ej).transposed().apply(A.ring, ei);
            for (int k = 0; k < n; ++k) {
                out.cc(n + i, j, k) = a_part2[k];
                out.cc(n + i, j, n + k) = d_part2[k];
            }
        }
    }

    DoubleAlgebra<R> d;
    d.algebra = std::move(out);
    d.form = natural_omega(A.ring, n);
    d.construction = "connes_from_r";
    return d;
}

// Σ_i (e_i ⊗ e_i* - e_i* ⊗ e_i) on a 2n-dimensional double; antisymmetric by
// construction.
template <typename R>
TensorElement<R> canonical_r(const R& ring, int n) {
    auto r = TensorElement<R>::zeros(ring, 2 * n);
    for (int i = 0; i < n; ++i) {
        r.at(i, n + i) = ring.one();
        r.at(n + i, i) = ring.zero() - ring.one();
    }
    return r;
}

// Symmetric variant Σ_i e_i ⊗ e_i*, the identity-map tensor of the
// Heisenberg-double theorem.
template <typename R>
TensorElement<R> canonical_r_symmetric(const R& ring, int n) {
    auto r = TensorElement<R>::zeros(ring, 2 * n);
    for (int i = 0; i < n; ++i) r.at(i, n + i) = ring.one();
    return r;
}

// A and A* must stay subalgebras of a double: products of the halves may not
// leak into the other summand.
template <typename R>
CheckReport check_subalgebras(const DoubleAlgebra<R>& d) {
    CheckReport rep;
    rep.check = "check_subalgebras";
    const int n = d.half_dim();
    const auto& A = d.algebra;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ++rep.checked;
            for (int k = 0; k < n; ++k) {
                if (!A.cc(i, j, n + k).is_zero())
                    rep.fail("A closed", "(" + A.basis[i] + "," + A.basis[j] + ")",
                             render_scalar(A.cc(i, j, n + k)), "0");
                if (!A.cc(n + i, n + j, k).is_zero())
                    rep.fail("A* closed", "(" + A.basis[n + i] + "," + A.basis[n + j] + ")",
                             render_scalar(A.cc(n + i, n + j, k)), "0");
            }
        }
    return rep;
}

} // namespace ayb
