#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "besselnorm/spaces.hpp"

#include <cmath>

using namespace besselnorm;

TEST_CASE("exponent construction and duality") {
    CHECK_THROWS_AS(Exponent::finite(0.5), std::invalid_argument);
    CHECK(Exponent::finite(1.0).is_one());
    CHECK(Exponent::infinity().is_infinite());
    CHECK_THROWS_AS(Exponent::infinity().value(), std::logic_error);

    // dual(1) = inf and dual(inf) = 1, exactly (the tag, not a float)
    CHECK(dual_exponent(Exponent::finite(1.0)).is_infinite());
    CHECK(dual_exponent(Exponent::infinity()).is_one());
    CHECK(dual_exponent(Exponent::finite(2.0)).value() == doctest::Approx(2.0));
    CHECK(dual_exponent(Exponent::finite(4.0)).value() == doctest::Approx(4.0 / 3.0));

    // involution up to rounding, including through the infinite tag
    CHECK(dual_exponent(dual_exponent(Exponent::finite(1.0))).is_one());
    for (double p : {1.5, 2.0, 3.0, 7.0}) {
        Exponent dd = dual_exponent(dual_exponent(Exponent::finite(p)));
        CHECK(dd.value() == doctest::Approx(p).epsilon(1e-14));
    }
    CHECK(dual_exponent(dual_exponent(Exponent::infinity())).is_infinite());
}

TEST_CASE("space descriptors") {
    CHECK_THROWS_AS(SpaceDescriptor::lp(2.0, 0), std::invalid_argument);
    SpaceDescriptor c = SpaceDescriptor::c0(3);
    SpaceDescriptor li = SpaceDescriptor::lp_inf(3);
    CHECK(c.same_norm_as(li));       // identical norms at finite truncation
    CHECK_FALSE(c == li);            // but distinct tags
    CHECK(c.name() == "c0[3]");
    CHECK(SpaceDescriptor::lp(2.0, 4).name().substr(0, 1) == "l");
}

TEST_CASE("lp norms") {
    ColVec v(3);
    v << 3, -4, 0;
    CHECK(lp_norm(v, Exponent::finite(1.0)) == doctest::Approx(7.0));
    CHECK(lp_norm(v, Exponent::finite(2.0)) == doctest::Approx(5.0));
    CHECK(lp_norm(v, Exponent::infinity()) == doctest::Approx(4.0));
    CHECK(lp_norm(v, Exponent::finite(3.0)) ==
          doctest::Approx(std::cbrt(27.0 + 64.0)));

    // overflow-safe for large exponents and large entries
    ColVec big(2);
    big << 1e300, 5e299;
    CHECK(lp_norm(big, Exponent::finite(40.0)) > 9.9e299);
    CHECK(std::isfinite(lp_norm(big, Exponent::finite(40.0))));

    CHECK(lp_norm(ColVec(), Exponent::finite(2.0)) == 0.0);
    CHECK(lp_norm(ColVec::Zero(4), Exponent::finite(3.0)) == 0.0);

    Vector x(v, SpaceDescriptor::c0(3));
    CHECK(vector_norm(x) == doctest::Approx(4.0));
}

TEST_CASE("vector validates length") {
    ColVec v(2);
    v << 1, 2;
    CHECK_THROWS_AS(Vector(v, SpaceDescriptor::lp(2.0, 3)), DimensionMismatch);
}

TEST_CASE("dual ball extreme points") {
    auto pts_inf = dual_ball_extreme_points(SpaceDescriptor::lp_inf(3));
    REQUIRE(pts_inf.has_value());
    CHECK(pts_inf->size() == 6);  // ±e_i
    for (const auto& p : *pts_inf) CHECK(p.cwiseAbs().sum() == doctest::Approx(1.0));

    auto pts_c0 = dual_ball_extreme_points(SpaceDescriptor::c0(2));
    REQUIRE(pts_c0.has_value());
    CHECK(pts_c0->size() == 4);

    auto pts_one = dual_ball_extreme_points(SpaceDescriptor::lp(1.0, 3));
    REQUIRE(pts_one.has_value());
    CHECK(pts_one->size() == 8);  // {±1}^3
    for (const auto& p : *pts_one) CHECK(p.cwiseAbs().maxCoeff() == doctest::Approx(1.0));

    CHECK_FALSE(dual_ball_extreme_points(SpaceDescriptor::lp(2.0, 3)).has_value());
    CHECK_FALSE(dual_ball_extreme_points(SpaceDescriptor::lp(1.5, 3)).has_value());

    CHECK_THROWS_AS(dual_ball_extreme_points(SpaceDescriptor::lp(1.0, 25), 1 << 20),
                    CapExceeded);
}
