#pragma once

#include <map>
#include <string>

#include "ayb/algebra.hpp"
#include "ayb/tensor.hpp"

namespace ayb {

using Binding = std::map<std::string, GaussScalar>;

inline GaussScalar instantiate(const PolyScalar& p, const Binding& b) { return poly_eval(p, b); }

template <typename Out, typename In, typename F>
Out map_algebra(const In& A, typename Out::Ring ring, F&& f) {
    Out out = Out::zeros(ring, A.basis);
    for (size_t k = 0; k < A.c.size(); ++k) out.c[k] = f(A.c[k]);
    return out;
}

inline Algebra<GaussRing> instantiate(const Algebra<PolyRing>& A, const Binding& b) {
    return map_algebra<Algebra<GaussRing>>(A, GaussRing{},
                                           [&](const PolyScalar& p) { return poly_eval(p, b); });
}

inline TensorElement<GaussRing> instantiate(const TensorElement<PolyRing>& r, const Binding& b) {
    TensorElement<GaussRing> out = TensorElement<GaussRing>::zeros(GaussRing{}, r.dim);
    for (size_t k = 0; k < r.a.size(); ++k) out.a[k] = poly_eval(r.a[k], b);
    return out;
}

// Lift a numeric algebra into a polynomial ring (constants become constant
// polynomials), for symbolic system generation over a fixed algebra.
inline Algebra<PolyRing> lift(const Algebra<GaussRing>& A, const PolyRing& ring) {
    return map_algebra<Algebra<PolyRing>>(A, ring,
                                          [](const GaussScalar& g) { return PolyScalar(g); });
}

inline Algebra<PolyRing> lift(const Algebra<PolyRing>& A, const PolyRing& ring) {
    return map_algebra<Algebra<PolyRing>>(A, ring, [](const PolyScalar& p) { return p; });
}

// Reduce a numeric algebra mod p (entries must be p-integral rationals).
inline Algebra<FFRing> reduce_mod(const Algebra<GaussRing>& A, uint32_t p) {
    return map_algebra<Algebra<FFRing>>(A, FFRing{p},
                                        [&](const GaussScalar& g) { return to_ff(g, p); });
}

} // namespace ayb
