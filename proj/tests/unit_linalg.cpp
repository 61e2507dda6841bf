#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adsfam/linalg.hpp"

using namespace adsfam;

TEST_CASE("rank of a parametric matrix") {
    RatFunc L = RatFunc::lambda();
    RFMatrix m = {{RatFunc(1), L}, {L, L * L}};  // rank 1 identically
    CHECK(rref_in_place(m) == 1);
    RFMatrix m2 = {{RatFunc(1), L}, {L, RatFunc(1)}};  // det = 1 - L^2, generically nonzero
    CHECK(rref_in_place(m2) == 2);
}

TEST_CASE("nullspace basis") {
    RatFunc L = RatFunc::lambda();
    // x + L y = 0 over (x, y, z): two free directions
    auto basis = nullspace({{RatFunc(1), L, RatFunc()}}, 3);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK((v[0] + L * v[1]).is_zero());
    // full-rank square system has trivial nullspace
    CHECK(nullspace({{RatFunc(1), L}, {L, RatFunc(1)}}, 2).empty());
    // empty system: everything is free
    CHECK(nullspace({}, 2).size() == 2);
}
