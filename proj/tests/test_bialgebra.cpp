#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ayb/bialgebra.hpp"

#include "test_support.hpp"

using namespace ayb;
using namespace aybtest;

namespace {
const std::vector<std::string> DUAL = {"e1*", "e2*", "e3*"};
}

TEST_CASE("coproducts induced by r1 and r2") {
    auto A = h_alpha({"a12"});
    auto c1 = coproduct_from_r(A, r1_symbolic(A.ring));
    CHECK(c1.delta[0].is_zero());
    CHECK(c1.delta[1].is_zero());
    CHECK(render_tensor(c1.delta[2], A.basis) == "-(a12*alpha + a12)*e2(x)e2");

    auto B = h_alpha({"a23"});
    auto c2 = coproduct_from_r(B, r2_symbolic(B.ring));
    CHECK(render_tensor(c2.delta[0], B.basis) == "(a23*alpha + a23)*e2(x)e2");
    CHECK(c2.delta[1].is_zero());
    CHECK(c2.delta[2].is_zero());
}

TEST_CASE("dual algebra from the coproducts") {
    auto A = h_alpha({"a12"});
    auto dual1 = dual_algebra_from_coproduct(A, coproduct_from_r(A, r1_symbolic(A.ring)));
    auto prod = multiply(dual1, dual1.basis_vec(1), dual1.basis_vec(1));
    CHECK(dual1.render_vec(prod) == "-(a12*alpha + a12)*e3*");
    CHECK(check_associativity(dual1).pass());

    auto B = h_alpha({"a23"});
    auto dual2 = dual_algebra_from_coproduct(B, coproduct_from_r(B, r2_symbolic(B.ring)));
    auto prod2 = multiply(dual2, dual2.basis_vec(1), dual2.basis_vec(1));
    CHECK(dual2.render_vec(prod2) == "(a23*alpha + a23)*e1*");

    // zero coproduct gives the zero product
    auto zc = Coproduct<PolyRing>::zeros(A.ring, 3);
    auto dz = dual_algebra_from_coproduct(A, zc);
    for (auto& s : dz.c) CHECK(s.is_zero());
}

TEST_CASE("check_aib") {
    auto A = h_alpha({"a12"});
    CHECK(check_aib(A, coproduct_from_r(A, r1_symbolic(A.ring))).pass());

    auto B = h_alpha({"a23"});
    CHECK(check_aib(B, coproduct_from_r(B, r2_symbolic(B.ring))).pass());

    // zero coproduct passes trivially
    CHECK(check_aib(A, Coproduct<PolyRing>::zeros(A.ring, 3)).pass());

    // Delta from a non-solution r fails with a witness pair
    auto H0 = h_numeric(0);
    auto r = TensorElement<GaussRing>::zeros(GaussRing{}, 3);
    r.at(0, 2) = GaussScalar::one();
    auto rep = check_aib(H0, coproduct_from_r(H0, r));
    CHECK(!rep.pass());
    CHECK(!rep.failures.front().witness.empty());
}

TEST_CASE("check_matched_pair on (H_alpha, H_alpha*)") {
    auto A = h_alpha({"a12"});
    auto dual1 = dual_algebra_from_coproduct(A, coproduct_from_r(A, r1_symbolic(A.ring)));
    auto rep = check_matched_pair(A, dual1);
    CHECK(rep.pass());
    CHECK(rep.checked == 54); // both identities on all 27 triples

    auto B = h_alpha({"a23"});
    auto dual2 = dual_algebra_from_coproduct(B, coproduct_from_r(B, r2_symbolic(B.ring)));
    CHECK(check_matched_pair(B, dual2).pass());

    // zero dual product always matches
    auto H0 = h_numeric(0);
    auto zero_dual = Algebra<GaussRing>::zeros(GaussRing{}, {"e1*", "e2*", "e3*"});
    CHECK(check_matched_pair(H0, zero_dual).pass());

    // an ad hoc dual product e1*∘e1* = e2* is not a matched pair
    auto bad = zero_dual;
    bad.cc(0, 0, 1) = GaussScalar::one();
    REQUIRE(check_associativity(bad).pass());
    auto rep2 = check_matched_pair(H0, bad);
    CHECK(!rep2.pass());
}

TEST_CASE("tensor-to-map convention is pinned to the paper's values") {
    PolyRing ring({"a12", "a23"});
    auto r1 = r1_symbolic(ring);
    std::vector<std::string> basis = {"e1", "e2", "e3"};
    auto e1s = std::vector<PolyScalar>{PolyScalar::one(), PolyScalar::zero(), PolyScalar::zero()};
    auto e2s = std::vector<PolyScalar>{PolyScalar::zero(), PolyScalar::one(), PolyScalar::zero()};
    auto e3s = std::vector<PolyScalar>{PolyScalar::zero(), PolyScalar::zero(), PolyScalar::one()};

    CHECK(render_combo(tensor_as_map(ring, r1, e2s), basis) == "-a12*e1");
    CHECK(render_combo(tensor_as_map(ring, r1, e1s), basis) == "a12*e2");
    CHECK(render_combo(tensor_as_map(ring, r1, e3s), basis) == "0");

    auto r2 = r2_symbolic(ring);
    CHECK(render_combo(tensor_as_map(ring, r2, e2s), basis) == "a23*e3");
    CHECK(render_combo(tensor_as_map(ring, r2, e3s), basis) == "-a23*e2");
    CHECK(render_combo(tensor_as_map(ring, r2, e1s), basis) == "0");

    // antisymmetric pairing: <r(a*), b*> = -<r(b*), a*>
    for (auto& a : {e1s, e2s, e3s})
        for (auto& b : {e1s, e2s, e3s}) {
            auto ra = tensor_as_map(ring, r1, a);
            auto rb = tensor_as_map(ring, r1, b);
            PolyScalar lhs = PolyScalar::zero(), rhs = PolyScalar::zero();
            for (int k = 0; k < 3; ++k) {
                lhs += ra[k] * b[k];
                rhs += rb[k] * a[k];
            }
            CHECK((lhs + rhs).is_zero());
        }
}

TEST_CASE("check_o_operator") {
    auto H0 = h_alpha({"a12"}); // symbolic alpha covers H0 as an instance
    CHECK(check_o_operator(H0, r1_symbolic(H0.ring)).pass());
    auto B = h_alpha({"a23"});
    CHECK(check_o_operator(B, r2_symbolic(B.ring)).pass());

    auto H0n = h_numeric(0);
    CHECK(check_o_operator(H0n, TensorElement<GaussRing>::zeros(GaussRing{}, 3)).pass());

    auto bad = TensorElement<GaussRing>::zeros(GaussRing{}, 3);
    bad.at(0, 2) = GaussScalar::one();
    auto rep = check_o_operator(H0n, bad);
    CHECK(!rep.pass());
    CHECK(rep.checked == 9);
}

TEST_CASE("check_dual_homomorphism") {
    auto A = h_alpha({"a12", "a23"});
    auto r1 = r1_symbolic(A.ring);
    auto dual1 = dual_algebra_from_coproduct(A, coproduct_from_r(A, r1));
    CHECK(check_dual_homomorphism(A, dual1, r1).pass());

    auto zero_dual = Algebra<PolyRing>::zeros(A.ring, {"e1*", "e2*", "e3*"});
    CHECK(check_dual_homomorphism(A, zero_dual,
                                  TensorElement<PolyRing>::zeros(A.ring, 3)).pass());

    // r1 against the r2-induced dual product fails at a* = b* = e2*
    auto dual2 = dual_algebra_from_coproduct(A, coproduct_from_r(A, r2_symbolic(A.ring)));
    auto rep = check_dual_homomorphism(A, dual2, r1);
    CHECK(!rep.pass());
    bool at22 = false;
    for (auto& f : rep.failures)
        if (f.witness == "(e2*,e2*)") at22 = true;
    CHECK(at22);
}

TEST_CASE("duality invariant: dual product and coproduct are mutual transposes") {
    auto A = h_alpha({"a12"});
    auto c = coproduct_from_r(A, r1_symbolic(A.ring));
    auto dual = dual_algebra_from_coproduct(A, c);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto prod = multiply(dual, dual.basis_vec(i), dual.basis_vec(j));
            for (int k = 0; k < 3; ++k) CHECK(prod[k] == c.delta[k].at(i, j));
        }
}
