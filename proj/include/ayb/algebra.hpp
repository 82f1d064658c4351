#pragma once

#include <string>
#include <vector>

#include "ayb/errors.hpp"
#include "ayb/render.hpp"
#include "ayb/report_types.hpp"
#include "ayb/rings.hpp"

namespace ayb {

// Column convention throughout: column j is the image of basis vector j.
template <typename R>
struct LinearMap {
    using S = typename R::Scalar;

    int rows = 0, cols = 0;
    std::vector<S> m; // row-major

    static LinearMap zeros(const R& ring, int rows, int cols) {
        LinearMap lm;
        lm.rows = rows;
        lm.cols = cols;
        lm.m.assign(static_cast<size_t>(rows) * cols, ring.zero());
        return lm;
    }

    S& at(int r, int c) { return m[static_cast<size_t>(r) * cols + c]; }
    const S& at(int r, int c) const { return m[static_cast<size_t>(r) * cols + c]; }

    std::vector<S> apply(const R& ring, const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols) throw DimensionMismatch("LinearMap::apply");
        std::vector<S> out(rows, ring.zero());
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) out[r] = out[r] + at(r, c) * v[c];
        return out;
    }

    LinearMap transposed() const {
        LinearMap t;
        t.rows = cols;
        t.cols = rows;
        t.m.resize(m.size(), m.empty() ? S{} : m[0]);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    // this ∘ other
    LinearMap compose(const R& ring, const LinearMap& other) const {
        if (cols != other.rows) throw DimensionMismatch("LinearMap::compose");
        LinearMap out = zeros(ring, rows, other.cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < other.cols; ++c)
                for (int k = 0; k < cols; ++k)
                    out.at(r, c) = out.at(r, c) + at(r, k) * other.at(k, c);
        return out;
    }

    LinearMap operator+(const LinearMap& o) const {
        LinearMap out = *this;
        for (size_t k = 0; k < m.size(); ++k) out.m[k] = out.m[k] + o.m[k];
        return out;
    }
    LinearMap operator-(const LinearMap& o) const {
        LinearMap out = *this;
        for (size_t k = 0; k < m.size(); ++k) out.m[k] = out.m[k] - o.m[k];
        return out;
    }

    bool operator==(const LinearMap& o) const {
        return rows == o.rows && cols == o.cols && m == o.m;
    }

    bool is_zero() const {
        for (auto& s : m)
            if (!s.is_zero()) return false;
        return true;
    }
};

// Finite-dimensional algebra by structure constants: e_i · e_j = Σ_k c[i][j][k] e_k.
template <typename R>
struct Algebra {
    using Ring = R;
    using S = typename R::Scalar;

    R ring;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<S> c; // flattened [i][j][k]

    static Algebra zeros(R ring, std::vector<std::string> basis_names) {
        Algebra a;
        a.dim = static_cast<int>(basis_names.size());
        a.basis = std::move(basis_names);
        a.c.assign(static_cast<size_t>(a.dim) * a.dim * a.dim, ring.zero());
        a.ring = std::move(ring);
        return a;
    }

    S& cc(int i, int j, int k) { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
    const S& cc(int i, int j, int k) const {
        return c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }

    std::vector<S> zero_vec() const { return std::vector<S>(dim, ring.zero()); }
    std::vector<S> basis_vec(int i) const {
        auto v = zero_vec();
        v[i] = ring.one();
        return v;
    }

    int basis_index(const std::string& name) const {
        for (int i = 0; i < dim; ++i)
            if (basis[i] == name) return i;
        throw DimensionMismatch("unknown basis element '" + name + "'");
    }

    std::string render_vec(const std::vector<S>& v) const { return render_combo(v, basis); }
};

template <typename R>
std::vector<typename R::Scalar> multiply(const Algebra<R>& A,
                                         const std::vector<typename R::Scalar>& u,
                                         const std::vector<typename R::Scalar>& v) {
    if (static_cast<int>(u.size()) != A.dim || static_cast<int>(v.size()) != A.dim)
        throw DimensionMismatch("multiply: vector length != dim");
    auto out = A.zero_vec();
    for (int i = 0; i < A.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < A.dim; ++j) {
            if (v[j].is_zero()) continue;
            auto uv = u[i] * v[j];
            for (int k = 0; k < A.dim; ++k) out[k] = out[k] + uv * A.cc(i, j, k);
        }
    }
    return out;
}

template <typename R>
CheckReport check_associativity(const Algebra<R>& A) {
    CheckReport rep;
    rep.check = "check_associativity";
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k) {
                ++rep.checked;
                auto lhs = multiply(A, multiply(A, A.basis_vec(i), A.basis_vec(j)), A.basis_vec(k));
                auto rhs = multiply(A, A.basis_vec(i), multiply(A, A.basis_vec(j), A.basis_vec(k)));
                if (lhs != rhs)
                    rep.fail("associativity",
                             "(" + A.basis[i] + "*" + A.basis[j] + ")*" + A.basis[k],
                             A.render_vec(lhs), A.render_vec(rhs));
            }
    return rep;
}

// Matrix of y ↦ x·y.
template <typename R>
LinearMap<R> left_rep(const Algebra<R>& A, const std::vector<typename R::Scalar>& x) {
    auto lm = LinearMap<R>::zeros(A.ring, A.dim, A.dim);
    for (int j = 0; j < A.dim; ++j) {
        auto col = multiply(A, x, A.basis_vec(j));
        for (int r = 0; r < A.dim; ++r) lm.at(r, j) = col[r];
    }
    return lm;
}

// Matrix of y ↦ y·x.
template <typename R>
LinearMap<R> right_rep(const Algebra<R>& A, const std::vector<typename R::Scalar>& x) {
    auto lm = LinearMap<R>::zeros(A.ring, A.dim, A.dim);
    for (int j = 0; j < A.dim; ++j) {
        auto col = multiply(A, A.basis_vec(j), x);
        for (int r = 0; r < A.dim; ++r) lm.at(r, j) = col[r];
    }
    return lm;
}

// Dual maps on dual coordinates: ⟨L*(x)u*, v⟩ = ⟨u*, x·v⟩, so the matrix is
// the transpose of left_rep(x); likewise for R*.
template <typename R>
LinearMap<R> dual_left_rep(const Algebra<R>& A, const std::vector<typename R::Scalar>& x) {
    return left_rep(A, x).transposed();
}

template <typename R>
LinearMap<R> dual_right_rep(const Algebra<R>& A, const std::vector<typename R::Scalar>& x) {
    return right_rep(A, x).transposed();
}

// Bimodule data (l, r, V): one pair of maps per basis element of A.
template <typename R>
struct BimoduleSpec {
    int v_dim = 0;
    std::vector<std::string> v_basis;
    std::vector<LinearMap<R>> l;
    std::vector<LinearMap<R>> r;
};

// (R*, 0) on A*, the module the paper's semidirect corollary uses.
template <typename R>
BimoduleSpec<R> dual_right_bimodule(const Algebra<R>& A) {
    BimoduleSpec<R> spec;
    spec.v_dim = A.dim;
    for (auto& b : A.basis) spec.v_basis.push_back(b + "*");
    for (int i = 0; i < A.dim; ++i) {
        spec.l.push_back(dual_right_rep(A, A.basis_vec(i)));
        spec.r.push_back(LinearMap<R>::zeros(A.ring, A.dim, A.dim));
    }
    return spec;
}

// (0, L*) on A*.
template <typename R>
BimoduleSpec<R> dual_left_bimodule(const Algebra<R>& A) {
    BimoduleSpec<R> spec;
    spec.v_dim = A.dim;
    for (auto& b : A.basis) spec.v_basis.push_back(b + "*");
    for (int i = 0; i < A.dim; ++i) {
        spec.l.push_back(LinearMap<R>::zeros(A.ring, A.dim, A.dim));
        spec.r.push_back(dual_left_rep(A, A.basis_vec(i)));
    }
    return spec;
}

template <typename R>
BimoduleSpec<R> zero_bimodule(const Algebra<R>& A, int v_dim,
                              std::vector<std::string> v_basis) {
    BimoduleSpec<R> spec;
    spec.v_dim = v_dim;
    spec.v_basis = std::move(v_basis);
    for (int i = 0; i < A.dim; ++i) {
        spec.l.push_back(LinearMap<R>::zeros(A.ring, v_dim, v_dim));
        spec.r.push_back(LinearMap<R>::zeros(A.ring, v_dim, v_dim));
    }
    return spec;
}

// l(xy) = l(x)l(y), r(xy) = r(y)r(x), l(x)r(y) = r(y)l(x) on all basis pairs.
template <typename R>
CheckReport check_bimodule(const Algebra<R>& A, const BimoduleSpec<R>& spec) {
    CheckReport rep;
    rep.check = "check_bimodule";
    auto l_of = [&](const std::vector<typename R::Scalar>& x) {
        auto acc = LinearMap<R>::zeros(A.ring, spec.v_dim, spec.v_dim);
        for (int i = 0; i < A.dim; ++i)
            for (size_t k = 0; k < acc.m.size(); ++k) acc.m[k] = acc.m[k] + x[i] * spec.l[i].m[k];
        return acc;
    };
    auto r_of = [&](const std::vector<typename R::Scalar>& x) {
        auto acc = LinearMap<R>::zeros(A.ring, spec.v_dim, spec.v_dim);
        for (int i = 0; i < A.dim; ++i)
            for (size_t k = 0; k < acc.m.size(); ++k) acc.m[k] = acc.m[k] + x[i] * spec.r[i].m[k];
        return acc;
    };
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            auto xy = multiply(A, A.basis_vec(i), A.basis_vec(j));
            auto pair_name = "(" + A.basis[i] + "," + A.basis[j] + ")";
            ++rep.checked;
            if (!(l_of(xy) == spec.l[i].compose(A.ring, spec.l[j])))
                rep.fail("l(xy) = l(x)l(y)", pair_name, "", "");
            ++rep.checked;
            if (!(r_of(xy) == spec.r[j].compose(A.ring, spec.r[i])))
                rep.fail("r(xy) = r(y)r(x)", pair_name, "", "");
            ++rep.checked;
            if (!(spec.l[i].compose(A.ring, spec.r[j]) == spec.r[j].compose(A.ring, spec.l[i])))
                rep.fail("l(x)r(y) = r(y)l(x)", pair_name, "", "");
        }
    return rep;
}

// A ⋉_{l,r} V with (x1+v1)(x2+v2) = x1·x2 + l(x1)v2 + r(x2)v1.
template <typename R>
Algebra<R> semidirect_product(const Algebra<R>& A, const BimoduleSpec<R>& spec) {
    auto bim = check_bimodule(A, spec);
    if (!bim.pass()) throw NotABimodule(bim.summary());
    std::vector<std::string> names = A.basis;
    names.insert(names.end(), spec.v_basis.begin(), spec.v_basis.end());
    auto out = Algebra<R>::zeros(A.ring, std::move(names));
    int n = A.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) out.cc(i, j, k) = A.cc(i, j, k);
            // e_i * v_j  and  v_i * e_j
            for (int k = 0; k < spec.v_dim; ++k) {
                out.cc(i, n + j, n + k) = spec.l[i].at(k, j);
                out.cc(n + i, j, n + k) = spec.r[j].at(k, i);
            }
        }
    return out;
}

} // namespace ayb
