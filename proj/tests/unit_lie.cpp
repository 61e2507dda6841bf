#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adsfam/lie.hpp"

using namespace adsfam;

TEST_CASE("dimension and basis blocks") {
    for (int n : {4, 5, 6, 7}) {
        LieContext g(n);
        CHECK(g.dim() == n * (n + 1) / 2);
        // the first n-1 elements are exactly n^-
        for (int k = 0; k < n - 1; ++k) CHECK(g.basis()[k].subspace == Subspace::NMinus);
        CHECK(g.basis()[n - 2].name.str() == "Q2-");
    }
    CHECK_THROWS_AS(LieContext(3), std::invalid_argument);
}

TEST_CASE("full bracket table, Jacobi, and form preservation") {
    for (int n : {4, 5}) {
        LieContext g(n);
        for (const auto& rc : g.verify_bracket_table()) {
            INFO(rc.relation);
            CHECK(rc.pass);
        }
        CHECK(g.verify_jacobi());
        CHECK(g.verify_form_preservation());
    }
}

TEST_CASE("selected bracket values") {
    LieContext g(6);
    CHECK(g.bracket({GenKind::Q1plus}, {GenKind::Q1minus}) ==
          g.element({GenKind::H}).scaled(2));
    CHECK(g.bracket({GenKind::Q1plus}, {GenKind::Q2minus}) ==
          g.element({GenKind::H2}).scaled(-2));
    CHECK(g.bracket({GenKind::Yplus, 1}, {GenKind::Yminus, 2}) ==
          g.element({GenKind::Mij, 1, 2}).scaled(2));
    // antisymmetry handled by index normalization: M_21 = -M_12
    CHECK(g.element({GenKind::Mij, 2, 1}) == -g.element({GenKind::Mij, 1, 2}));
    CHECK(g.element({GenKind::Mij, 1, 1}).is_zero());
    CHECK(g.index_of({GenKind::Mij, 1, 1}) == -1);
}

TEST_CASE("decompose round-trips and rejects outsiders") {
    LieContext g(5);
    LieElt x = g.element({GenKind::H}).scaled(rat(3)) -
               g.element({GenKind::Yminus, 2}).scaled(rat(1, 2));
    CHECK(g.decompose(x.matrix()) == x);
    RatMat bad(g.matrix_size());
    bad.at(0, 0) = 1;  // symmetric piece, not in o(2,n-1)
    CHECK_THROWS_AS(g.decompose(bad), std::domain_error);
}

TEST_CASE("reflection adjoints act diagonally on n^-") {
    LieContext small(5), big(6);
    GroupElement w1 = small.include_group(big, small.w1());
    GroupElement w2 = small.include_group(big, small.w2());
    GroupElement j = small.include_group(big, small.J());
    auto diag = [&](const GroupElement& w, const GenName& g, const Rat& sign) {
        CHECK(big.ad_group(w, big.element(g)) == big.element(g).scaled(sign));
    };
    diag(w1, {GenKind::Q1minus}, rat(-1));
    diag(w1, {GenKind::Q2minus}, rat(1));
    diag(w1, {GenKind::Yminus, 1}, rat(1));
    diag(w2, {GenKind::Q2minus}, rat(-1));
    diag(w2, {GenKind::Q1minus}, rat(1));
    // i(J) flips only the transverse generator Y_{n-2}
    diag(j, {GenKind::Yminus, 3}, rat(-1));
    diag(j, {GenKind::Yminus, 1}, rat(1));
    diag(j, {GenKind::Q1minus}, rat(1));
    diag(j, {GenKind::Q2minus}, rat(1));
}

TEST_CASE("inclusion preserves brackets") {
    LieContext small(5), big(6);
    LieElt x = small.element({GenKind::Yplus, 1});
    LieElt y = small.element({GenKind::Q1minus});
    LieElt lhs = small.include_into(big, small.bracket(x, y));
    LieElt rhs = big.bracket(small.include_into(big, x), small.include_into(big, y));
    CHECK(lhs == rhs);
    CHECK(small.include_into(big, small.element({GenKind::H})) == big.element({GenKind::H}));
}

TEST_CASE("w elements") {
    LieContext g(5);
    CHECK(g.w_element(1) == g.element({GenKind::Q1plus}) - g.element({GenKind::Q2plus}));
    CHECK(g.w_element(3) ==
          -(g.element({GenKind::Q1minus}) + g.element({GenKind::Q2minus})));
    // [Y_j^+, Z_j^+] = W1
    CHECK(g.bracket({GenKind::Yplus, 1}, {GenKind::Zplus, 1}) == g.w_element(1));
    CHECK(g.bracket({GenKind::Yminus, 1}, {GenKind::Zminus, 1}) == g.w_element(4));
}
