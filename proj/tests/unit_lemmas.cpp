#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adsfam/lemmas.hpp"

using namespace adsfam;

TEST_CASE("power commutators against their closed forms") {
    for (int m : {5, 6}) {
        LieContext ctx(m);
        for (int N = 1; N <= 3; ++N) {
            CHECK(power_commutator_diagonal(ctx, N));
            for (int r = 2; r <= m - 3; ++r) CHECK(power_commutator_offdiagonal(ctx, N, r));
        }
    }
}

TEST_CASE("Laplacian commutator remainder shapes") {
    for (int n : {4, 5, 6}) {
        LieContext ctx(n);
        CHECK(laplacian_commutator_shape(ctx));
        for (int j = 1; j <= 3; ++j) CHECK(laplacian_power_commutator_shape(ctx, j));
    }
}

TEST_CASE("commutation relations of the Laplacian and transverse element") {
    LieContext big(6);
    UEAElement delta = nminus_laplacian(big);
    UEAElement h = UEAElement::from_lie(big.element({GenKind::H}));
    for (int k : {1, 2}) {
        // [H, Delta^k] = -2k Delta^k
        CHECK(UEAElement::commutator(h, delta.pow(k)) ==
              delta.pow(k).scaled(RatFunc(Rat(-2 * k))));
    }
}
