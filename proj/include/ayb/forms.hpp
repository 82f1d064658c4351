#pragma once

#include "ayb/algebra.hpp"

namespace ayb {

inline bool is_unit(const GaussScalar& s) { return !s.is_zero(); }
inline bool is_unit(const FFScalar& s) { return !s.is_zero(); }
inline bool is_unit(const PolyScalar& s) { return s.is_constant() && !s.is_zero(); }

// Bilinear form by its Gram matrix: form(e_i, e_j) = gram[i][j].
template <typename R>
struct BilinearForm {
    enum class Kind { Symmetric, Antisymmetric };

    Kind kind = Kind::Symmetric;
    int dim = 0;
    std::vector<typename R::Scalar> gram; // row-major

    static BilinearForm zeros(const R& ring, int dim, Kind kind) {
        BilinearForm f;
        f.kind = kind;
        f.dim = dim;
        f.gram.assign(static_cast<size_t>(dim) * dim, ring.zero());
        return f;
    }

    typename R::Scalar& at(int i, int j) { return gram[static_cast<size_t>(i) * dim + j]; }
    const typename R::Scalar& at(int i, int j) const {
        return gram[static_cast<size_t>(i) * dim + j];
    }

    typename R::Scalar eval(const R& ring, const std::vector<typename R::Scalar>& x,
                            const std::vector<typename R::Scalar>& y) const {
        auto out = ring.zero();
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) out = out + x[i] * at(i, j) * y[j];
        }
        return out;
    }

    bool is_symmetric() const {
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }
    bool is_antisymmetric() const {
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j)
                if (!(at(i, j) + at(j, i)).is_zero()) return false;
        return true;
    }
};

// Natural forms on A ⊕ A* (indices 0..n-1 for A, n..2n-1 for A*):
//   B(x + a*, y + b*) = <x, b*> + <a*, y>
//   ω(x + a*, y + b*) = -<x, b*> + <a*, y>
template <typename R>
BilinearForm<R> natural_B(const R& ring, int n) {
    auto f = BilinearForm<R>::zeros(ring, 2 * n, BilinearForm<R>::Kind::Symmetric);
    for (int i = 0; i < n; ++i) {
        f.at(i, n + i) = ring.one();
        f.at(n + i, i) = ring.one();
    }
    return f;
}

template <typename R>
BilinearForm<R> natural_omega(const R& ring, int n) {
    auto f = BilinearForm<R>::zeros(ring, 2 * n, BilinearForm<R>::Kind::Antisymmetric);
    for (int i = 0; i < n; ++i) {
        f.at(i, n + i) = ring.zero() - ring.one();
        f.at(n + i, i) = ring.one();
    }
    return f;
}

// B(xy, z) = B(x, yz) on all basis triples.
template <typename R>
CheckReport check_invariance(const Algebra<R>& A, const BilinearForm<R>& B) {
    CheckReport rep;
    rep.check = "check_invariance";
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            auto xy = multiply(A, A.basis_vec(i), A.basis_vec(j));
            for (int k = 0; k < A.dim; ++k) {
                auto yz = multiply(A, A.basis_vec(j), A.basis_vec(k));
                auto lhs = B.eval(A.ring, xy, A.basis_vec(k));
                auto rhs = B.eval(A.ring, A.basis_vec(i), yz);
                ++rep.checked;
                if (!(lhs == rhs))
                    rep.fail("B(xy,z) = B(x,yz)",
                             "(" + A.basis[i] + "," + A.basis[j] + "," + A.basis[k] + ")",
                             render_scalar(lhs), render_scalar(rhs));
            }
        }
    return rep;
}

// ω(xy,z) + ω(yz,x) + ω(zx,y) = 0 on all basis triples.
template <typename R>
CheckReport check_connes_cocycle(const Algebra<R>& A, const BilinearForm<R>& omega) {
    if (!omega.is_antisymmetric())
        throw NotAntisymmetricForm("check_connes_cocycle needs an antisymmetric form");
    CheckReport rep;
    rep.check = "check_connes_cocycle";
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k) {
                auto xy = multiply(A, A.basis_vec(i), A.basis_vec(j));
                auto yz = multiply(A, A.basis_vec(j), A.basis_vec(k));
                auto zx = multiply(A, A.basis_vec(k), A.basis_vec(i));
                auto total = omega.eval(A.ring, xy, A.basis_vec(k)) +
                             omega.eval(A.ring, yz, A.basis_vec(i)) +
                             omega.eval(A.ring, zx, A.basis_vec(j));
                ++rep.checked;
                if (!total.is_zero())
                    rep.fail("cyclic cocycle",
                             "(" + A.basis[i] + "," + A.basis[j] + "," + A.basis[k] + ")",
                             render_scalar(total), "0");
            }
    return rep;
}

// Solve M v = f by Gaussian elimination with unit pivots. Over a polynomial
// ring only constant pivots invert, which covers the Gram matrices that
// appear here; a singular system raises DegenerateForm.
template <typename R>
std::vector<typename R::Scalar> solve_linear(const R& ring, LinearMap<R> M,
                                             std::vector<typename R::Scalar> f) {
    const int n = M.rows;
    if (M.cols != n || static_cast<int>(f.size()) != n)
        throw DimensionMismatch("solve_linear: shape");
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (is_unit(M.at(row, col))) {
                pivot = row;
                break;
            }
        if (pivot < 0) {
            bool any = false;
            for (int row = col; row < n; ++row)
                if (!M.at(row, col).is_zero()) any = true;
            if (!any) throw DegenerateForm("singular Gram matrix");
            throw NotInvertible("no unit pivot available in solve_linear");
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(M.at(pivot, c), M.at(col, c));
            std::swap(f[pivot], f[col]);
        }
        auto inv = M.at(col, col).inverse();
        for (int c = 0; c < n; ++c) M.at(col, c) = M.at(col, c) * inv;
        f[col] = f[col] * inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || M.at(row, col).is_zero()) continue;
            auto factor = M.at(row, col);
            for (int c = 0; c < n; ++c) M.at(row, c) = M.at(row, c) - factor * M.at(col, c);
            f[row] = f[row] - factor * f[col];
        }
    }
    return f;
}

} // namespace ayb
