#pragma once

#include <algorithm>
#include <array>
#include <thread>

#include "ayb/sampling.hpp"
#include "ayb/tensor.hpp"

namespace ayb {

// The three contractions of the AYBE, exactly as displayed:
//   r12 r13 = Σ x_i x_j ⊗ y_i ⊗ y_j
//   r13 r23 = Σ x_i ⊗ x_j ⊗ y_i y_j
//   r23 r12 = Σ x_j ⊗ x_i y_j ⊗ y_i
// A golden test pins these to the canonical-r worked example.
template <typename R>
std::array<Tensor3<R>, 3> aybe_terms(const Algebra<R>& A, const TensorElement<R>& r) {
    if (r.dim != A.dim) throw DimensionMismatch("aybe_terms: tensor dim != algebra dim");
    const int n = A.dim;
    auto t1 = Tensor3<R>::zeros(A.ring, n);
    auto t2 = Tensor3<R>::zeros(A.ring, n);
    auto t3 = Tensor3<R>::zeros(A.ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (r.at(i, j).is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (r.at(k, l).is_zero()) continue;
                    auto co = r.at(i, j) * r.at(k, l);
                    for (int m = 0; m < n; ++m) {
                        if (!A.cc(i, k, m).is_zero())
                            t1.at(m, j, l) = t1.at(m, j, l) + co * A.cc(i, k, m);
                        if (!A.cc(j, l, m).is_zero())
                            t2.at(i, k, m) = t2.at(i, k, m) + co * A.cc(j, l, m);
                        // (i,j) indexes r23, (k,l) indexes r12
                        if (!A.cc(i, l, m).is_zero())
                            t3.at(k, m, j) = t3.at(k, m, j) + co * A.cc(i, l, m);
                    }
                }
        }
    return {t1, t2, t3};
}

// r12 r13 + r13 r23 - r23 r12; zero iff r solves the AYBE.
template <typename R>
Tensor3<R> aybe_residual(const Algebra<R>& A, const TensorElement<R>& r) {
    auto [t1, t2, t3] = aybe_terms(A, r);
    return t1 + t2 - t3;
}

inline std::string coeff_name(int i, int j, int dim) {
    if (dim <= 9) return "a" + std::to_string(i + 1) + std::to_string(j + 1);
    return "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

inline std::vector<std::string> coeff_names(int dim) {
    std::vector<std::string> out;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out.push_back(coeff_name(i, j, dim));
    return out;
}

// r with indeterminate entries a_ij over the given ring.
inline TensorElement<PolyRing> symbolic_r(const PolyRing& ring, int dim) {
    auto r = TensorElement<PolyRing>::zeros(ring, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (!ring.declares(coeff_name(i, j, dim)))
                throw UnknownIndeterminate(coeff_name(i, j, dim));
            r.at(i, j) = PolyScalar::var(coeff_name(i, j, dim));
        }
    return r;
}

// Nonzero coefficient polynomials of the symbolic residual, in lexicographic
// (i,j,k) order, deduplicated up to a nonzero constant multiple.
inline std::vector<PolyScalar> residual_system(const Tensor3<PolyRing>& res) {
    std::vector<PolyScalar> out;
    std::vector<PolyScalar> monic_seen;
    for (int i = 0; i < res.dim; ++i)
        for (int j = 0; j < res.dim; ++j)
            for (int k = 0; k < res.dim; ++k) {
                const PolyScalar& p = res.at(i, j, k);
                if (p.is_zero()) continue;
                PolyScalar m = p.monic();
                bool seen = false;
                for (auto& q : monic_seen)
                    if (q == m) {
                        seen = true;
                        break;
                    }
                if (!seen) {
                    monic_seen.push_back(m);
                    out.push_back(p);
                }
            }
    return out;
}

inline std::vector<PolyScalar> aybe_system(const Algebra<PolyRing>& A,
                                           const TensorElement<PolyRing>& r_symbolic) {
    return residual_system(aybe_residual(A, r_symbolic));
}

// A solution pattern with indeterminate entries, equality constraints
// (polynomials required to vanish) and nonvanishing conditions.
struct SolutionFamily {
    std::string id;
    std::string algebra; // host fixture id
    int dim = 3;
    PolyRing ring;
    std::vector<PolyScalar> pattern; // dim*dim, row-major
    std::vector<PolyScalar> constraints;
    std::vector<PolyScalar> nonzero;

    // catalog annotations
    std::string verbatim;
    std::string note;
    std::string corrects;   // id of the as-printed row this is a documented correction of
    bool expect_pass = true;

    const PolyScalar& at(int i, int j) const { return pattern[static_cast<size_t>(i) * dim + j]; }

    TensorElement<GaussRing> instantiate(const Binding& b) const {
        auto t = TensorElement<GaussRing>::zeros(GaussRing{}, dim);
        for (size_t k = 0; k < pattern.size(); ++k) t.a[k] = poly_eval(pattern[k], b);
        return t;
    }

    std::vector<std::string> all_indeterminates(const std::vector<std::string>& host) const {
        std::vector<std::string> vars = host;
        auto add = [&](const std::vector<std::string>& more) {
            for (auto& v : more)
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        };
        add(ring.indeterminates);
        for (auto& p : pattern) add(p.indeterminates());
        for (auto& p : constraints) add(p.indeterminates());
        for (auto& p : nonzero) add(p.indeterminates());
        std::sort(vars.begin(), vars.end());
        return vars;
    }
};

namespace detail {
inline Algebra<GaussRing> host_at(const Algebra<GaussRing>& A, const Binding&) { return A; }
inline Algebra<GaussRing> host_at(const Algebra<PolyRing>& A, const Binding& b) {
    return instantiate(A, b);
}
inline std::vector<std::string> host_indets(const Algebra<GaussRing>&) { return {}; }
inline std::vector<std::string> host_indets(const Algebra<PolyRing>& A) {
    return A.ring.indeterminates;
}

inline std::string render_binding(const Binding& b) {
    std::string s = "{";
    for (auto& [k, v] : b) {
        if (s.size() > 1) s += ", ";
        s += k + "=" + render(v);
    }
    return s + "}";
}
} // namespace detail

// Residual check at `samples` random constraint-satisfying rational points.
template <typename R>
CheckReport verify_family(const Algebra<R>& A, const SolutionFamily& fam, int samples,
                          uint64_t seed) {
    CheckReport rep;
    rep.check = "verify_family";
    rep.subject = fam.id;
    ConstraintSampler sampler(fam.all_indeterminates(detail::host_indets(A)), fam.constraints,
                              fam.nonzero, seed);
    for (int s = 0; s < samples; ++s) {
        Binding b = sampler.draw();
        auto host = detail::host_at(A, b);
        auto r = fam.instantiate(b);
        auto res = aybe_residual(host, r);
        ++rep.checked;
        if (!res.is_zero())
            rep.fail("aybe_residual = 0", "sample " + std::to_string(s) + " at " +
                     detail::render_binding(b), render_tensor3(res, host.basis), "0");
    }
    return rep;
}

// Exhaustive search over all p^(n^2) tensors; keeps candidates with zero
// residual, in lexicographic order of the row-major coefficient tuple.
// Sharded across threads over disjoint ranges with an order-preserving merge.
inline std::vector<TensorElement<FFRing>> enumerate_ff(const Algebra<FFRing>& A,
                                                       unsigned max_threads = 8) {
    const uint32_t p = A.ring.p;
    if (p != 2 && p != 3 && p != 5)
        throw SearchSpaceTooLarge("enumerate_ff supports p in {2,3,5}");
    if (A.dim > 3) throw SearchSpaceTooLarge("enumerate_ff supports dim <= 3");
    const int n = A.dim;
    const int cells = n * n;
    uint64_t total = 1;
    for (int k = 0; k < cells; ++k) total *= p;

    auto run_range = [&](uint64_t lo, uint64_t hi, std::vector<TensorElement<FFRing>>& out) {
        std::vector<uint32_t> a(cells, 0);
        std::vector<int64_t> res(static_cast<size_t>(n) * n * n);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            uint64_t v = idx;
            for (int k = cells - 1; k >= 0; --k) {
                a[k] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            std::fill(res.begin(), res.end(), 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (a[i * n + j] == 0) continue;
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l) {
                            if (a[k * n + l] == 0) continue;
                            int64_t co = int64_t(a[i * n + j]) * a[k * n + l];
                            for (int m = 0; m < n; ++m) {
                                uint32_t c1 = A.cc(i, k, m).value;
                                uint32_t c2 = A.cc(j, l, m).value;
                                uint32_t c3 = A.cc(i, l, m).value;
                                if (c1) res[(m * n + j) * n + l] += co * c1;
                                if (c2) res[(i * n + k) * n + m] += co * c2;
                                if (c3) res[(k * n + m) * n + j] -= co * c3;
                            }
                        }
                }
            bool ok = true;
            for (auto x : res)
                if (x % p != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                auto t = TensorElement<FFRing>::zeros(A.ring, n);
                for (int k = 0; k < cells; ++k) t.a[k] = FFScalar{a[k], p};
                out.push_back(std::move(t));
            }
        }
    };

    unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                          max_threads);
    if (workers <= 1 || total < 4096) {
        std::vector<TensorElement<FFRing>> out;
        run_range(0, total, out);
        return out;
    }
    std::vector<std::vector<TensorElement<FFRing>>> parts(workers);
    std::vector<std::thread> threads;
    uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
        threads.emplace_back([&, lo, hi, w] { run_range(lo, hi, parts[w]); });
    }
    for (auto& t : threads) t.join();
    std::vector<TensorElement<FFRing>> out;
    for (auto& part : parts)
        for (auto& t : part) out.push_back(std::move(t));
    return out;
}

// Independent route for the same enumeration: generate the symbolic system
// once, then evaluate it at every candidate. Used as a cross-path oracle.
inline std::vector<TensorElement<FFRing>> enumerate_ff_via_system(const Algebra<FFRing>& A) {
    const uint32_t p = A.ring.p;
    if (p != 2 && p != 3 && p != 5)
        throw SearchSpaceTooLarge("enumerate_ff_via_system supports p in {2,3,5}");
    if (A.dim > 3) throw SearchSpaceTooLarge("enumerate_ff_via_system supports dim <= 3");
    const int n = A.dim;
    const int cells = n * n;

    PolyRing ring(coeff_names(n));
    auto lifted = Algebra<PolyRing>::zeros(ring, A.basis);
    for (size_t k = 0; k < A.c.size(); ++k)
        lifted.c[k] = PolyScalar(static_cast<long long>(A.c[k].value));
    auto system = aybe_system(lifted, symbolic_r(ring, n));

    uint64_t total = 1;
    for (int k = 0; k < cells; ++k) total *= p;
    std::vector<TensorElement<FFRing>> out;
    std::vector<uint32_t> a(cells, 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t v = idx;
        for (int k = cells - 1; k >= 0; --k) {
            a[k] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        std::map<std::string, FFScalar> binding;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                binding[coeff_name(i, j, n)] = FFScalar{a[i * n + j], p};
        bool ok = true;
        for (auto& eq : system)
            if (!poly_eval_ff(eq, binding, p).is_zero()) {
                ok = false;
                break;
            }
        if (ok) {
            auto t = TensorElement<FFRing>::zeros(A.ring, n);
            for (int k = 0; k < cells; ++k) t.a[k] = FFScalar{a[k], p};
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace ayb
