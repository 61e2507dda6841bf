#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adsfam/diffop.hpp"
#include "adsfam/families.hpp"

using namespace adsfam;

TEST_CASE("d'Alembertian symbol and signature") {
    DiffOp d = DiffOp::dalembertian(2);
    CHECK(d.terms.at({2, 0}) == RatFunc(Rat(-1)));
    CHECK(d.terms.at({0, 2}) == RatFunc(1));
    MVPoly x1sq = MVPoly::monomial(2, {2});
    CHECK(d.apply(x1sq) == MVPoly::monomial(2, {}, RatFunc(Rat(-2))));
    // null function of the signature
    CHECK(d.apply(x1sq + MVPoly::monomial(2, {0, 2})).is_zero());
    for (int m : {3, 4, 5}) {
        MVPoly s;
        s.nvars = m;
        for (int i = 0; i < m; ++i) {
            std::vector<int> al(static_cast<size_t>(m), 0);
            al[static_cast<size_t>(i)] = 2;
            s.add(al, RatFunc(1));
        }
        CHECK(DiffOp::dalembertian(m).apply(s) ==
              MVPoly::monomial(m, {}, RatFunc(Rat(2 * (m - 2)))));
    }
}

TEST_CASE("restriction behavior") {
    int n = 4;
    DiffOp normal = DiffOp::monomial(n, {0, 0, 0, 1}).with_restriction();
    CHECK(normal.apply(MVPoly::monomial(n, {0, 0, 0, 1})) == MVPoly::monomial(n - 1, {}));
    DiffOp istar = DiffOp::restriction(n);
    CHECK(istar.apply(MVPoly::monomial(n, {1, 0, 0, 1})).is_zero());
    DiffOp tang = DiffOp::dalembertian(3).after_restriction(4);
    MVPoly f = MVPoly::monomial(4, {0, 2, 2, 0});
    MVPoly expect = MVPoly::monomial(3, {0, 0, 2}, RatFunc(2)) +
                    MVPoly::monomial(3, {0, 2, 0}, RatFunc(2));
    CHECK(tang.apply(f) == expect);
}

TEST_CASE("noncompact family operator") {
    CHECK(family_nc(5, 1) == DiffOp::monomial(5, {0, 0, 0, 0, 1}).with_restriction());
    DiffOp d = family_nc(4, 2);
    // Dal_{M^3} i* - (2L+1) i* d4^2
    RatFunc a0 = compute_coefficients(4, 2).coeff[0];
    DiffOp expect = DiffOp::dalembertian(3).after_restriction(4) +
                    DiffOp::monomial(4, {0, 0, 0, 2}).with_restriction().scaled(a0);
    CHECK(d == expect);
    CHECK(d.order() == 2);
    // apply at lambda = 0 to x4^2: coefficient -(2*0+1) * 2 = -2
    MVPoly r = d.eval_lambda(rat(0)).apply(MVPoly::monomial(4, {0, 0, 0, 2}));
    CHECK(r == MVPoly::monomial(3, {}, RatFunc(Rat(-2))));
}

TEST_CASE("special values at both distinguished points") {
    for (int n : {4, 5}) {
        for (int N : {1, 2}) {
            for (const auto& rc : verify_special_values(n, N)) {
                INFO(rc.relation);
                CHECK(rc.pass);
            }
        }
    }
}

TEST_CASE("pole during specialization is reported") {
    DiffOp d = DiffOp::monomial(3, {1}, RatFunc(Poly::constant(1), Poly::lambda()));
    CHECK_THROWS_AS(d.eval_lambda(rat(0)), std::domain_error);
}
