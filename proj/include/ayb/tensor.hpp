#pragma once

#include <string>
#include <vector>

#include "ayb/algebra.hpp"

namespace ayb {

// r = Σ a[i][j] e_i ⊗ e_j
template <typename R>
struct TensorElement {
    using S = typename R::Scalar;

    int dim = 0;
    std::vector<S> a; // flattened [i][j]

    static TensorElement zeros(const R& ring, int dim) {
        TensorElement t;
        t.dim = dim;
        t.a.assign(static_cast<size_t>(dim) * dim, ring.zero());
        return t;
    }

    S& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
    const S& at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }

    bool is_zero() const {
        for (auto& s : a)
            if (!s.is_zero()) return false;
        return true;
    }

    bool operator==(const TensorElement& o) const { return dim == o.dim && a == o.a; }

    TensorElement operator+(const TensorElement& o) const {
        TensorElement t = *this;
        for (size_t k = 0; k < a.size(); ++k) t.a[k] = t.a[k] + o.a[k];
        return t;
    }
    TensorElement operator-() const {
        TensorElement t = *this;
        for (auto& s : t.a) s = -s;
        return t;
    }
    TensorElement operator-(const TensorElement& o) const { return *this + (-o); }
};

// Exchange operator σ(x⊗y) = y⊗x.
template <typename R>
TensorElement<R> sigma(const TensorElement<R>& r) {
    TensorElement<R> t = r;
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) t.at(i, j) = r.at(j, i);
    return t;
}

template <typename R>
bool is_symmetric(const TensorElement<R>& r) {
    for (int i = 0; i < r.dim; ++i)
        for (int j = i + 1; j < r.dim; ++j)
            if (!(r.at(i, j) == r.at(j, i))) return false;
    return true;
}

template <typename R>
bool is_antisymmetric(const TensorElement<R>& r) {
    for (int i = 0; i < r.dim; ++i)
        for (int j = i; j < r.dim; ++j)
            if (!((r.at(i, j) + r.at(j, i)).is_zero())) return false;
    return true;
}

// r as a map A* → A: r(a*) = Σ_{i,j} a*(e_i) a[i][j] e_j, i.e. the functional
// contracts the first tensor slot. Pinned by r1(e2*) = -a12·e1.
template <typename R>
std::vector<typename R::Scalar> tensor_as_map(const R& ring, const TensorElement<R>& r,
                                              const std::vector<typename R::Scalar>& dual) {
    std::vector<typename R::Scalar> out(r.dim, ring.zero());
    for (int i = 0; i < r.dim; ++i) {
        if (dual[i].is_zero()) continue;
        for (int j = 0; j < r.dim; ++j) out[j] = out[j] + dual[i] * r.at(i, j);
    }
    return out;
}

template <typename R>
std::string render_tensor(const TensorElement<R>& r, const std::vector<std::string>& basis) {
    std::vector<typename R::Scalar> coeffs;
    std::vector<std::string> names;
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) {
            coeffs.push_back(r.at(i, j));
            names.push_back(basis[i] + "(x)" + basis[j]);
        }
    return render_combo(coeffs, names);
}

// Σ t[i][j][k] e_i ⊗ e_j ⊗ e_k
template <typename R>
struct Tensor3 {
    using S = typename R::Scalar;

    int dim = 0;
    std::vector<S> t; // flattened [i][j][k]

    static Tensor3 zeros(const R& ring, int dim) {
        Tensor3 x;
        x.dim = dim;
        x.t.assign(static_cast<size_t>(dim) * dim * dim, ring.zero());
        return x;
    }

    S& at(int i, int j, int k) { return t[(static_cast<size_t>(i) * dim + j) * dim + k]; }
    const S& at(int i, int j, int k) const {
        return t[(static_cast<size_t>(i) * dim + j) * dim + k];
    }

    bool is_zero() const {
        for (auto& s : t)
            if (!s.is_zero()) return false;
        return true;
    }

    bool operator==(const Tensor3& o) const { return dim == o.dim && t == o.t; }

    Tensor3 operator+(const Tensor3& o) const {
        Tensor3 x = *this;
        for (size_t k = 0; k < t.size(); ++k) x.t[k] = x.t[k] + o.t[k];
        return x;
    }
    Tensor3 operator-() const {
        Tensor3 x = *this;
        for (auto& s : x.t) s = -s;
        return x;
    }
    Tensor3 operator-(const Tensor3& o) const { return *this + (-o); }
};

template <typename R>
std::string render_tensor3(const Tensor3<R>& x, const std::vector<std::string>& basis) {
    std::vector<typename R::Scalar> coeffs;
    std::vector<std::string> names;
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j)
            for (int k = 0; k < x.dim; ++k) {
                coeffs.push_back(x.at(i, j, k));
                names.push_back(basis[i] + "(x)" + basis[j] + "(x)" + basis[k]);
            }
    return render_combo(coeffs, names);
}

} // namespace ayb
