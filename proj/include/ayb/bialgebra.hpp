#pragma once

#include "ayb/tensor.hpp"
#include "ayb/yangbaxter.hpp"

namespace ayb {

// Δ(e_i) as an n×n grid, one per basis element; linear extension elsewhere.
template <typename R>
struct Coproduct {
    int dim = 0;
    std::vector<TensorElement<R>> delta;

    static Coproduct zeros(const R& ring, int dim) {
        Coproduct c;
        c.dim = dim;
        c.delta.assign(dim, TensorElement<R>::zeros(ring, dim));
        return c;
    }

    TensorElement<R> of(const R& ring, const std::vector<typename R::Scalar>& x) const {
        auto out = TensorElement<R>::zeros(ring, dim);
        for (int k = 0; k < dim; ++k) {
            if (x[k].is_zero()) continue;
            for (size_t m = 0; m < out.a.size(); ++m) out.a[m] = out.a[m] + x[k] * delta[k].a[m];
        }
        return out;
    }
};

// (M ⊗ I) t  and  (I ⊗ M) t
template <typename R>
TensorElement<R> apply_left(const R& ring, const LinearMap<R>& M, const TensorElement<R>& t) {
    auto out = TensorElement<R>::zeros(ring, t.dim);
    for (int u = 0; u < t.dim; ++u)
        for (int v = 0; v < t.dim; ++v) {
            if (t.at(u, v).is_zero()) continue;
            for (int m = 0; m < t.dim; ++m)
                out.at(m, v) = out.at(m, v) + M.at(m, u) * t.at(u, v);
        }
    return out;
}

template <typename R>
TensorElement<R> apply_right(const R& ring, const LinearMap<R>& M, const TensorElement<R>& t) {
    auto out = TensorElement<R>::zeros(ring, t.dim);
    for (int u = 0; u < t.dim; ++u)
        for (int v = 0; v < t.dim; ++v) {
            if (t.at(u, v).is_zero()) continue;
            for (int m = 0; m < t.dim; ++m)
                out.at(u, m) = out.at(u, m) + M.at(m, v) * t.at(u, v);
        }
    return out;
}

// Δ(x) = (I ⊗ L(x) - R(x) ⊗ I) r
template <typename R>
Coproduct<R> coproduct_from_r(const Algebra<R>& A, const TensorElement<R>& r) {
    auto c = Coproduct<R>::zeros(A.ring, A.dim);
    for (int i = 0; i < A.dim; ++i) {
        auto x = A.basis_vec(i);
        c.delta[i] = apply_right(A.ring, left_rep(A, x), r) -
                     apply_left(A.ring, right_rep(A, x), r);
    }
    return c;
}

// (Δ ⊗ I)Δ(e_k) - (I ⊗ Δ)Δ(e_k) for each k; empty report means coassociative.
template <typename R>
CheckReport check_coassociativity(const Algebra<R>& A, const Coproduct<R>& c) {
    CheckReport rep;
    rep.check = "coassociativity";
    for (int k = 0; k < A.dim; ++k) {
        auto lhs = Tensor3<R>::zeros(A.ring, A.dim);
        auto rhs = Tensor3<R>::zeros(A.ring, A.dim);
        for (int u = 0; u < A.dim; ++u)
            for (int v = 0; v < A.dim; ++v) {
                auto co = c.delta[k].at(u, v);
                if (co.is_zero()) continue;
                for (int p = 0; p < A.dim; ++p)
                    for (int q = 0; q < A.dim; ++q) {
                        if (!c.delta[u].at(p, q).is_zero())
                            lhs.at(p, q, v) = lhs.at(p, q, v) + co * c.delta[u].at(p, q);
                        if (!c.delta[v].at(p, q).is_zero())
                            rhs.at(u, p, q) = rhs.at(u, p, q) + co * c.delta[v].at(p, q);
                    }
            }
        ++rep.checked;
        if (!(lhs == rhs))
            rep.fail("(Delta x I)Delta = (I x Delta)Delta", A.basis[k],
                     render_tensor3(lhs, A.basis), render_tensor3(rhs, A.basis));
    }
    return rep;
}

// Dual product from the coproduct: (e_i* ∘ e_j*)(x) = (e_i* ⊗ e_j*)(Δ(x)),
// i.e. d[i][j][k] = coefficient of e_i ⊗ e_j in Δ(e_k). The result lives on
// the dual space with basis names suffixed by '*'.
template <typename R>
Algebra<R> dual_algebra_from_coproduct(const Algebra<R>& A, const Coproduct<R>& c) {
    std::vector<std::string> dual_names;
    for (auto& b : A.basis) dual_names.push_back(b + "*");
    auto D = Algebra<R>::zeros(A.ring, std::move(dual_names));
    for (int k = 0; k < A.dim; ++k)
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j) D.cc(i, j, k) = c.delta[k].at(i, j);
    auto coa = check_coassociativity(A, c);
    if (!coa.pass()) throw NotCoassociative(coa.failures.front().witness);
    return D;
}

// Antisymmetric infinitesimal bialgebra conditions for (A, Δ):
//   (i)  Δ(x·y) = (I ⊗ L(x))Δ(y) + (R(y) ⊗ I)Δ(x)
//   (ii) (L(y) ⊗ I - I ⊗ R(y))Δ(x) + σ[(L(x) ⊗ I - I ⊗ R(x))Δ(y)] = 0
//   (iii) coassociativity
template <typename R>
CheckReport check_aib(const Algebra<R>& A, const Coproduct<R>& c) {
    CheckReport rep;
    rep.check = "check_aib";
    for (int i = 0; i < A.dim; ++i) {
        auto x = A.basis_vec(i);
        auto Lx = left_rep(A, x);
        auto Rx = right_rep(A, x);
        for (int j = 0; j < A.dim; ++j) {
            auto y = A.basis_vec(j);
            auto Ly = left_rep(A, y);
            auto Ry = right_rep(A, y);
            std::string pair = "(" + A.basis[i] + "," + A.basis[j] + ")";

            auto lhs = c.of(A.ring, multiply(A, x, y));
            auto rhs = apply_right(A.ring, Lx, c.delta[j]) + apply_left(A.ring, Ry, c.delta[i]);
            ++rep.checked;
            if (!(lhs == rhs))
                rep.fail("Delta(xy) = (IxL(x))Delta(y) + (R(y)xI)Delta(x)", pair,
                         render_tensor(lhs, A.basis), render_tensor(rhs, A.basis));

            auto balance = apply_left(A.ring, Ly, c.delta[i]) -
                           apply_right(A.ring, Ry, c.delta[i]) +
                           sigma(apply_left(A.ring, Lx, c.delta[j]) -
                                 apply_right(A.ring, Rx, c.delta[j]));
            ++rep.checked;
            if (!balance.is_zero())
                rep.fail("sigma-balance", pair, render_tensor(balance, A.basis), "0");
        }
    }
    auto coa = check_coassociativity(A, c);
    rep.checked += coa.checked;
    for (auto& f : coa.failures) rep.failures.push_back(f);
    return rep;
}

// Matched pair of (A, ·) and (A*, ∘) through the dual representations:
//   R*(x)(a ∘ b) = R*(L*_∘(a)x)b + (R*(x)a) ∘ b
//   R*(R*_∘(a)x)b + (L*(x)a) ∘ b = L*(L*_∘(b)x)a + a ∘ (R*(x)b)
template <typename R>
CheckReport check_matched_pair(const Algebra<R>& A, const Algebra<R>& Astar) {
    CheckReport rep;
    rep.check = "check_matched_pair";
    if (Astar.dim != A.dim) throw DimensionMismatch("matched pair dims differ");
    for (int p = 0; p < A.dim; ++p) {
        auto x = A.basis_vec(p);
        auto Rsx = dual_right_rep(A, x);
        auto Lsx = dual_left_rep(A, x);
        for (int i = 0; i < A.dim; ++i) {
            auto a = Astar.basis_vec(i);
            auto Lso_a = dual_left_rep(Astar, a);  // acts on A
            auto Rso_a = dual_right_rep(Astar, a); // acts on A
            for (int j = 0; j < A.dim; ++j) {
                auto b = Astar.basis_vec(j);
                std::string witness =
                    "(" + A.basis[p] + "," + Astar.basis[i] + "," + Astar.basis[j] + ")";

                auto lhs16 = Rsx.apply(A.ring, multiply(Astar, a, b));
                auto rhs16 = dual_right_rep(A, Lso_a.apply(A.ring, x)).apply(A.ring, b);
                {
                    auto t = multiply(Astar, Rsx.apply(A.ring, a), b);
                    for (int k = 0; k < A.dim; ++k) rhs16[k] = rhs16[k] + t[k];
                }
                ++rep.checked;
                if (!(lhs16 == rhs16))
                    rep.fail("matched-pair eq 16", witness, Astar.render_vec(lhs16),
                             Astar.render_vec(rhs16));

                auto lhs17 = dual_right_rep(A, Rso_a.apply(A.ring, x)).apply(A.ring, b);
                {
                    auto t = multiply(Astar, Lsx.apply(A.ring, a), b);
                    for (int k = 0; k < A.dim; ++k) lhs17[k] = lhs17[k] + t[k];
                }
                auto Lso_b = dual_left_rep(Astar, b);
                auto rhs17 = dual_left_rep(A, Lso_b.apply(A.ring, x)).apply(A.ring, a);
                {
                    auto t = multiply(Astar, a, Rsx.apply(A.ring, b));
                    for (int k = 0; k < A.dim; ++k) rhs17[k] = rhs17[k] + t[k];
                }
                ++rep.checked;
                if (!(lhs17 == rhs17))
                    rep.fail("matched-pair eq 17", witness, Astar.render_vec(lhs17),
                             Astar.render_vec(rhs17));
            }
        }
    }
    return rep;
}

// O-operator identity for r viewed as a map A* -> A:
//   r(a*)·r(b*) = r(R*(r(a*))b* + L*(r(b*))a*)
template <typename R>
CheckReport check_o_operator(const Algebra<R>& A, const TensorElement<R>& r) {
    CheckReport rep;
    rep.check = "check_o_operator";
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            auto a = A.basis_vec(i), b = A.basis_vec(j);
            auto ra = tensor_as_map(A.ring, r, a);
            auto rb = tensor_as_map(A.ring, r, b);
            auto lhs = multiply(A, ra, rb);
            auto arg = dual_right_rep(A, ra).apply(A.ring, b);
            auto arg2 = dual_left_rep(A, rb).apply(A.ring, a);
            for (int k = 0; k < A.dim; ++k) arg[k] = arg[k] + arg2[k];
            auto rhs = tensor_as_map(A.ring, r, arg);
            ++rep.checked;
            if (!(lhs == rhs))
                rep.fail("O-operator identity",
                         "(" + A.basis[i] + "*," + A.basis[j] + "*)", A.render_vec(lhs),
                         A.render_vec(rhs));
        }
    return rep;
}

// r(a* ∘ b*) = r(a*)·r(b*) on all dual-basis pairs.
template <typename R>
CheckReport check_dual_homomorphism(const Algebra<R>& A, const Algebra<R>& Astar,
                                    const TensorElement<R>& r) {
    CheckReport rep;
    rep.check = "check_dual_homomorphism";
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            auto ab = multiply(Astar, Astar.basis_vec(i), Astar.basis_vec(j));
            auto lhs = tensor_as_map(A.ring, r, ab);
            auto rhs = multiply(A, tensor_as_map(A.ring, r, A.basis_vec(i)),
                                tensor_as_map(A.ring, r, A.basis_vec(j)));
            ++rep.checked;
            if (!(lhs == rhs))
                rep.fail("r(a ∘ b) = r(a)·r(b)",
                         "(" + Astar.basis[i] + "," + Astar.basis[j] + ")", A.render_vec(lhs),
                         A.render_vec(rhs));
        }
    return rep;
}

} // namespace ayb
