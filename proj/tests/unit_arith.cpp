#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adsfam/ratfunc.hpp"

using namespace adsfam;

TEST_CASE("rational helpers") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat_str(rat(7, 3)) == "7/3");
    CHECK(rat_parse("-5/10") == rat(-1, 2));
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("polynomial arithmetic and canonical form") {
    Poly L = Poly::lambda();
    Poly p = L * L - Poly::constant(1);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == -1);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);  // trailing zeros trimmed
    CHECK(p.eval(rat(3)) == 8);
    CHECK(p.str() == "-1 + L^2");
    CHECK((L.scaled(rat(2)) + Poly::constant(2)).str() == "2 + 2*L");
}

TEST_CASE("polynomial division and gcd") {
    Poly L = Poly::lambda();
    Poly p = (L - Poly::constant(1)) * (L + Poly::constant(1));
    CHECK(p / (L - Poly::constant(1)) == L + Poly::constant(1));
    CHECK_THROWS_AS(p / (L - Poly::constant(2)), std::domain_error);
    Poly g = Poly::gcd(p, (L - Poly::constant(1)) * L);
    CHECK(g == L - Poly::constant(1));  // monic
    Poly q, r;
    Poly::divmod(L * L, L.scaled(rat(2)), q, r);
    CHECK(q == L.scaled(rat(1, 2)));
    CHECK(r.is_zero());
}

TEST_CASE("shift substitutes lambda + c") {
    Poly L = Poly::lambda();
    Poly p = L * L;
    Poly s = p.shifted(rat(1));  // (L+1)^2
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 2);
    CHECK(s.coeff(2) == 1);
}

TEST_CASE("rational functions stay reduced with monic denominator") {
    Poly L = Poly::lambda();
    RatFunc f(L * L - Poly::constant(1), L.scaled(rat(2)) - Poly::constant(2));
    CHECK(f.is_polynomial());
    CHECK(f.num() == (L + Poly::constant(1)).scaled(rat(1, 2)));
    RatFunc g = RatFunc(1) / RatFunc(L);
    CHECK((f * g * RatFunc(L)) == f);
    CHECK((g - g).is_zero());
    CHECK_THROWS_AS(RatFunc(Poly::constant(1), Poly()), std::domain_error);
    CHECK_THROWS_AS(f / RatFunc(0), std::domain_error);
}

TEST_CASE("evaluation and poles") {
    Poly L = Poly::lambda();
    RatFunc g = RatFunc(Poly::constant(1), L - Poly::constant(2));
    CHECK(g.eval_at(rat(3)) == 1);
    CHECK_THROWS_AS(g.eval_at(rat(2)), std::domain_error);
    CHECK(g.shifted(rat(2)).eval_at(rat(1)) == 1);
    CHECK(g.str() == "(1)/(-2 + L)");
    CHECK(RatFunc(L + Poly::constant(1)).str("\\lambda") == "1 + \\lambda");
}
