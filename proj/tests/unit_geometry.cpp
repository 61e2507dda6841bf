#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adsfam/geometry.hpp"

using namespace adsfam;

TEST_CASE("embedding hits the cone") {
    MinkowskiPoint zero(4, Rat(0));
    CHECK(embed(zero) == base_point(6));
    MinkowskiPoint e1{Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK(embed(e1) == ConePoint{Rat(0), Rat(2), Rat(0), Rat(2), Rat(0), Rat(0)});
    MinkowskiPoint w{Rat(1), Rat(2), Rat(3), Rat(4)};
    CHECK(on_cone(embed(w)));
    CHECK(quadratic_form(embed(w)) == 0);
}

TEST_CASE("inverse coordinates") {
    CHECK(invert(base_point(6)) == MinkowskiPoint(4, Rat(0)));
    MinkowskiPoint w{Rat(1, 2), Rat(-3), Rat(7, 5), Rat(0)};
    CHECK(invert(embed(w)) == w);
    // projective: scaling the cone point does not change the image
    ConePoint p = embed(w);
    for (auto& c : p) c *= rat(5, 3);
    CHECK(invert(p) == w);
    ConePoint singular{Rat(1), Rat(1), Rat(0), Rat(-1), Rat(0), Rat(0)};
    CHECK_THROWS_WITH_AS(invert(singular), "point in singular set D_n", std::domain_error);
}

TEST_CASE("hyperboloid membership") {
    ConePoint p{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK(on_hyperboloid(p));
    CHECK(!on_hyperboloid(base_point(6)));
}

TEST_CASE("nilpotent exponential") {
    LieContext ctx(6);
    MinkowskiPoint zero(5, Rat(0));
    CHECK(exp_nminus(ctx, zero).matrix == RatMat::identity(7));
    MinkowskiPoint w{Rat(1), Rat(-2), Rat(1, 3), Rat(0), Rat(4)};
    GroupElement g = exp_nminus(ctx, w);
    // matches the closed-form embedding on the base ray
    CHECK(g.matrix * base_point(7) == embed(w));
    // inverse by negation
    MinkowskiPoint neg = w;
    for (auto& c : neg) c = -c;
    CHECK(g.matrix * exp_nminus(ctx, neg).matrix == RatMat::identity(7));
}

TEST_CASE("isotropy classification") {
    LieContext ctx(5);
    CHECK(isotropy_check(ctx, ctx.w1()) == Isotropy::FixesRay);
    CHECK(isotropy_check(ctx, ctx.w2()) == Isotropy::FixesRay);
    CHECK(isotropy_check(ctx, ctx.J()) == Isotropy::FixesLine);
    MinkowskiPoint w{Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK(isotropy_check(ctx, exp_nminus(ctx, w)) == Isotropy::Neither);
}
