#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace ayb;
using namespace aybtest;

namespace {

// A5: e2e3=e2, e3e1=e1, e3e3=e3. Has an idempotent, so multiplication
// operators do not all annihilate each other like on H_alpha.
Algebra<GaussRing> algebra_a5() {
    auto A5 = Algebra<GaussRing>::zeros(GaussRing{}, {"e1", "e2", "e3"});
    A5.cc(1, 2, 1) = GaussScalar::one();
    A5.cc(2, 0, 0) = GaussScalar::one();
    A5.cc(2, 2, 2) = GaussScalar::one();
    return A5;
}

BimoduleSpec<GaussRing> ll_spec(const Algebra<GaussRing>& A) {
    BimoduleSpec<GaussRing> ll;
    ll.v_dim = A.dim;
    ll.v_basis = {"v1", "v2", "v3"};
    for (int i = 0; i < A.dim; ++i) {
        ll.l.push_back(left_rep(A, A.basis_vec(i)));
        ll.r.push_back(left_rep(A, A.basis_vec(i)));
    }
    return ll;
}

} // namespace

TEST_CASE("H_alpha products") {
    auto A = h_alpha();
    auto e1 = A.basis_vec(0), e3 = A.basis_vec(2);
    CHECK(A.render_vec(multiply(A, e1, e3)) == "e2");
    CHECK(A.render_vec(multiply(A, e3, e1)) == "alpha*e2");
    CHECK(multiply(A, A.zero_vec(), e3) == A.zero_vec());
}

TEST_CASE("check_associativity") {
    CHECK(check_associativity(h_alpha()).pass());

    // A3 from the nondecomposable classification: e1e1=e2, e2e1=e3, e1e2=e3
    auto A3 = Algebra<GaussRing>::zeros(GaussRing{}, {"e1", "e2", "e3"});
    A3.cc(0, 0, 1) = GaussScalar::one();
    A3.cc(1, 0, 2) = GaussScalar::one();
    A3.cc(0, 1, 2) = GaussScalar::one();
    auto rep = check_associativity(A3);
    CHECK(rep.pass());
    CHECK(rep.checked == 27);

    // corrupting H_0 with e2·e2 = e1 breaks it at (e1 e3) e2
    auto bad = h_numeric(0);
    bad.cc(1, 1, 0) = GaussScalar::one();
    auto rep2 = check_associativity(bad);
    CHECK(!rep2.pass());
    bool found = false;
    for (auto& f : rep2.failures)
        if (f.witness == "(e1*e3)*e2") {
            found = true;
            CHECK(f.lhs == "e1");
            CHECK(f.rhs == "0");
        }
    CHECK(found);
}

TEST_CASE("left and right representations") {
    auto A = h_alpha();
    auto L1 = left_rep(A, A.basis_vec(0));
    CHECK(L1.at(1, 2) == PolyScalar::one()); // e3 -> e2
    int nonzero = 0;
    for (auto& s : L1.m)
        if (!s.is_zero()) ++nonzero;
    CHECK(nonzero == 1);

    CHECK(left_rep(A, A.zero_vec()).is_zero());

    auto R1 = right_rep(A, A.basis_vec(0));
    CHECK(R1.at(1, 2) == PolyScalar::var("alpha")); // e3 -> alpha e2
}

TEST_CASE("dual representations follow the paper's worked values") {
    auto A = h_alpha();
    auto e1 = A.basis_vec(0), e3 = A.basis_vec(2);
    std::vector<std::string> dual_basis = {"e1*", "e2*", "e3*"};
    auto e2s = A.basis_vec(1); // coordinates of e2* in the dual basis

    CHECK(render_combo(dual_left_rep(A, e1).apply(A.ring, e2s), dual_basis) == "e3*");
    CHECK(render_combo(dual_right_rep(A, e3).apply(A.ring, e2s), dual_basis) == "e1*");
    CHECK(render_combo(dual_right_rep(A, e1).apply(A.ring, e2s), dual_basis) == "alpha*e3*");
    CHECK(render_combo(dual_left_rep(A, e3).apply(A.ring, e2s), dual_basis) == "alpha*e1*");
}

TEST_CASE("dual pairing contract on all basis triples") {
    auto A = h_alpha();
    for (int x = 0; x < 3; ++x) {
        auto Ls = dual_left_rep(A, A.basis_vec(x));
        auto Rs = dual_right_rep(A, A.basis_vec(x));
        for (int u = 0; u < 3; ++u) {
            auto img = Ls.apply(A.ring, A.basis_vec(u));
            auto img2 = Rs.apply(A.ring, A.basis_vec(u));
            for (int v = 0; v < 3; ++v) {
                // (L*(x) e_u*)(e_v) = e_u*(x·e_v)
                auto xv = multiply(A, A.basis_vec(x), A.basis_vec(v));
                CHECK(img[v] == xv[u]);
                auto vx = multiply(A, A.basis_vec(v), A.basis_vec(x));
                CHECK(img2[v] == vx[u]);
            }
        }
    }
}

TEST_CASE("representation laws on H_alpha") {
    auto A = h_alpha();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto x = A.basis_vec(i), y = A.basis_vec(j);
            auto xy = multiply(A, x, y);
            CHECK(left_rep(A, xy) == left_rep(A, x).compose(A.ring, left_rep(A, y)));
            CHECK(right_rep(A, xy) == right_rep(A, y).compose(A.ring, right_rep(A, x)));
            CHECK(left_rep(A, x).compose(A.ring, right_rep(A, y)) ==
                  right_rep(A, y).compose(A.ring, left_rep(A, x)));
        }
}

TEST_CASE("check_bimodule") {
    auto A = h_alpha();
    CHECK(check_bimodule(A, dual_right_bimodule(A)).pass());
    CHECK(check_bimodule(A, dual_left_bimodule(A)).pass());
    CHECK(check_bimodule(A, zero_bimodule(A, 2, {"v1", "v2"})).pass());

    // On a two-step nilpotent algebra every composite of multiplication
    // operators vanishes, so even (L, L) passes all three laws there; a
    // genuine second-law failure needs an idempotent.
    auto A5 = algebra_a5();
    REQUIRE(check_associativity(A5).pass());
    auto rep = check_bimodule(A5, ll_spec(A5));
    CHECK(!rep.pass());
    bool second_law = false;
    for (auto& f : rep.failures)
        if (f.law == "r(xy) = r(y)r(x)") second_law = true;
    CHECK(second_law);
}

TEST_CASE("semidirect product H0 x H0*") {
    auto H0 = h_numeric(0);
    auto D = semidirect_product(H0, dual_right_bimodule(H0));
    REQUIRE(D.dim == 6);
    CHECK(check_associativity(D).pass());

    // e3 * e2* = e1*  (paper's worked value)
    CHECK(D.render_vec(multiply(D, D.basis_vec(2), D.basis_vec(4))) == "e1*");
    // e1 * e3 = e2: the proof prints e3 here, but Prop. pro1 forces e2
    CHECK(D.render_vec(multiply(D, D.basis_vec(0), D.basis_vec(2))) == "e2");

    // mixed products vanish for the zero bimodule
    auto Z = semidirect_product(H0, zero_bimodule(H0, 3, {"v1", "v2", "v3"}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(multiply(Z, Z.basis_vec(i), Z.basis_vec(3 + j)) == Z.zero_vec());
            CHECK(multiply(Z, Z.basis_vec(3 + i), Z.basis_vec(j)) == Z.zero_vec());
        }

    CHECK_THROWS_AS(semidirect_product(algebra_a5(), ll_spec(algebra_a5())), NotABimodule);
}

TEST_CASE("semidirect output is associative for all catalog-style bimodules") {
    for (long long alpha : {0LL, 1LL, 2LL, -1LL}) {
        auto A = h_numeric(alpha);
        CHECK(check_associativity(semidirect_product(A, dual_right_bimodule(A))).pass());
        CHECK(check_associativity(semidirect_product(A, dual_left_bimodule(A))).pass());
    }
}

TEST_CASE("instantiate symbolic algebra") {
    auto A = h_alpha();
    auto H1 = instantiate(A, {{"alpha", GaussScalar(1)}});
    CHECK(multiply(H1, H1.basis_vec(2), H1.basis_vec(0)) == H1.basis_vec(1));
    CHECK_THROWS_AS(instantiate(A, {}), MissingBinding);
}
