#pragma once

// Hand-built fixtures for unit tests. The catalog's data files are exercised
// separately; unit tests stay independent of them.

#include "ayb/algebra.hpp"
#include "ayb/binding.hpp"
#include "ayb/tensor.hpp"

namespace aybtest {

using namespace ayb;

// Extended Heisenberg algebra: e1·e3 = e2, e3·e1 = alpha·e2, symbolic alpha.
inline Algebra<PolyRing> h_alpha(std::vector<std::string> extra_indets = {}) {
    std::vector<std::string> names = {"alpha"};
    names.insert(names.end(), extra_indets.begin(), extra_indets.end());
    auto A = Algebra<PolyRing>::zeros(PolyRing(names), {"e1", "e2", "e3"});
    A.cc(0, 2, 1) = PolyScalar::one();
    A.cc(2, 0, 1) = PolyScalar::var("alpha");
    return A;
}

// Numeric H_alpha at a fixed alpha (0 gives the Heisenberg algebra, 1 the
// commutative variant).
inline Algebra<GaussRing> h_numeric(long long alpha) {
    auto A = Algebra<GaussRing>::zeros(GaussRing{}, {"e1", "e2", "e3"});
    A.cc(0, 2, 1) = GaussScalar::one();
    A.cc(2, 0, 1) = GaussScalar(alpha);
    return A;
}

// r1 = a12 (e1⊗e2 - e2⊗e1) with symbolic a12, over the given ring.
inline TensorElement<PolyRing> r1_symbolic(const PolyRing& ring) {
    auto r = TensorElement<PolyRing>::zeros(ring, 3);
    r.at(0, 1) = PolyScalar::var("a12");
    r.at(1, 0) = -PolyScalar::var("a12");
    return r;
}

// r2 = a23 (e2⊗e3 - e3⊗e2)
inline TensorElement<PolyRing> r2_symbolic(const PolyRing& ring) {
    auto r = TensorElement<PolyRing>::zeros(ring, 3);
    r.at(1, 2) = PolyScalar::var("a23");
    r.at(2, 1) = -PolyScalar::var("a23");
    return r;
}

inline PolyScalar ps(const std::string& text, const PolyRing& ring) {
    return parse_scalar(text, ring);
}

} // namespace aybtest

#include "ayb/dendriform.hpp"

namespace aybtest {

// The lambda-split of H_0: e1 ≺ e3 = (1-λ)e2, e1 ≻ e3 = λe2.
inline DendriformAlgebra<PolyRing> d1_lambda(std::vector<std::string> extra_indets = {}) {
    std::vector<std::string> names = {"lambda"};
    names.insert(names.end(), extra_indets.begin(), extra_indets.end());
    auto D = DendriformAlgebra<PolyRing>::zeros(PolyRing(names), {"e1", "e2", "e3"});
    D.pc(0, 2, 1) = PolyScalar::one() - PolyScalar::var("lambda");
    D.sc(0, 2, 1) = PolyScalar::var("lambda");
    return D;
}

// Table 4 row 3 solution: r = a12(e1⊗e2+e2⊗e1) + a22 e2⊗e2 + a23(e2⊗e3+e3⊗e2).
inline TensorElement<PolyRing> table4_row3_r(const PolyRing& ring) {
    auto r = TensorElement<PolyRing>::zeros(ring, 3);
    r.at(0, 1) = PolyScalar::var("a12");
    r.at(1, 0) = PolyScalar::var("a12");
    r.at(1, 1) = PolyScalar::var("a22");
    r.at(1, 2) = PolyScalar::var("a23");
    r.at(2, 1) = PolyScalar::var("a23");
    return r;
}

} // namespace aybtest
