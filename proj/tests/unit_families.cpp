#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adsfam/families.hpp"

using namespace adsfam;

TEST_CASE("recursion coefficients, closed examples") {
    // order 2: a_0 = -(2L + n - 3)
    CHECK(compute_coefficients(5, 2).coeff[0].str() == "-2 - 2*L");
    CHECK(compute_coefficients(4, 2).coeff[0].str() == "-1 - 2*L");
    // order 4, n = 5: a_1 = -4L, a_0 = (2L)(2L-2)/3
    auto fc = compute_coefficients(5, 4);
    CHECK(fc.coeff[2] == RatFunc(1));
    CHECK(fc.coeff[1].str() == "-4*L");
    CHECK(fc.coeff[0].str() == "-4/3*L + 4/3*L^2");
    // odd order 3, n = 5: b_0 = -2L/3
    CHECK(compute_coefficients(5, 3).coeff[0].str() == "-2/3*L");
    CHECK(compute_coefficients(4, 0).coeff == std::vector<RatFunc>{RatFunc(1)});
    CHECK_THROWS_AS(compute_coefficients(3, 2), std::invalid_argument);
}

TEST_CASE("recursion relation holds for every step") {
    for (int n : {4, 6}) {
        for (int order : {4, 5, 6}) {
            auto fc = compute_coefficients(n, order);
            int N = order / 2;
            bool even = order % 2 == 0;
            RatFunc L = RatFunc::lambda();
            for (int j = 1; j <= N; ++j) {
                long d = even ? static_cast<long>(N - j + 1) * (2 * N - 2 * j + 1)
                              : static_cast<long>(N - j + 1) * (2 * N - 2 * j + 3);
                long s = even ? n - 1 - 4 * N + 2 * j : n - 3 - 4 * N + 2 * j;
                RatFunc lhs = RatFunc(Rat(d)) * fc.coeff[j - 1] +
                              RatFunc(Rat(j)) * ((L * RatFunc(2)) + RatFunc(Rat(s))) *
                                  fc.coeff[j];
                CHECK(lhs.is_zero());
            }
        }
    }
}

TEST_CASE("family element structure") {
    LieContext big(5);
    UEAElement d = build_family(big, compute_coefficients(4, 3));
    CHECK(d.in_nminus());
    CHECK(d.weight() == -3);
    // order-1 family is the transverse generator itself
    CHECK(build_family(big, compute_coefficients(4, 1)) == transverse_generator(big));
    CHECK_THROWS_AS(build_family(big, compute_coefficients(5, 2)), std::invalid_argument);
}

TEST_CASE("equivariance across small grid") {
    for (int n : {4, 5}) {
        LieContext big(n + 1);
        for (int order = 0; order <= 4; ++order) {
            UEAElement d = build_family(big, compute_coefficients(n, order));
            for (const auto& rc : verify_equivariance(big, d, order)) {
                INFO("n=" << n << " order=" << order << " " << rc.relation);
                CHECK(rc.pass);
            }
        }
    }
}

TEST_CASE("solution space is one dimensional and matches the recursion") {
    LieContext big(5);
    auto u = verify_uniqueness(big, 2);
    CHECK(u.dimension == 1);
    CHECK(u.generator_matches_family);
}

TEST_CASE("perturbed coefficients violate the raising condition") {
    LieContext big(5);
    for (const auto& rc : negative_controls(big, 2)) {
        INFO(rc.relation);
        CHECK(rc.pass);
    }
}

TEST_CASE("parity under the embedded reflections") {
    for (int order : {2, 3}) {
        LieContext small(4), big(5);
        UEAElement d = build_family(big, compute_coefficients(4, order));
        for (const auto& rc : verify_parity(small, big, d, order)) {
            INFO(rc.relation);
            CHECK(rc.pass);
        }
    }
}

TEST_CASE("centralizer of m is spanned by Laplacian powers") {
    LieContext ctx(4);
    CHECK(centralizer_dimension(ctx, 2) == 2);
    CHECK(centralizer_dimension(ctx, 4) == 3);
    CHECK(centralizer_dimension(ctx, 3) == 2);  // odd degrees add nothing
    CHECK(laplacian_powers_centralize(ctx, 4));
}

TEST_CASE("word enumeration") {
    LieContext ctx(5);
    CHECK(nminus_words(ctx, 0).size() == 1);
    CHECK(nminus_words(ctx, 2).size() == 10);  // multisets of size 2 from 4 letters
}
