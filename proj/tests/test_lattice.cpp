#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "besselnorm/lattice.hpp"
#include "besselnorm/norms.hpp"

#include <cmath>
#include <random>

using namespace besselnorm;

namespace {
const SpaceDescriptor l2 = SpaceDescriptor::lp(2.0, 2);
const SpaceDescriptor c02 = SpaceDescriptor::c0(2);
const SpaceDescriptor l1 = SpaceDescriptor::lp(1.0, 2);
}  // namespace

TEST_CASE("order and lattice operations") {
    Matrix a(2, 2), b(2, 2);
    a << 1, -2, 0, 3;
    b << 2, -2, 1, 1;
    CoeffTensor u(a, l2, l2), v(b, l2, l2);

    CHECK_FALSE(lattice_leq(u, v));  // (1,1): 3 > 1
    CHECK(lattice_leq(u, lattice_join(u, v)));
    CHECK(lattice_leq(v, lattice_join(u, v)));
    CHECK(lattice_leq(lattice_meet(u, v), u));
    CHECK(lattice_leq(lattice_meet(u, v), v));
    CHECK(lattice_join(u, v).lam(0, 0) == 2);
    CHECK(lattice_meet(u, v).lam(1, 1) == 1);
    CHECK(lattice_abs(u).lam(0, 1) == 2);

    // strict shape/space checking, no implicit padding
    CoeffTensor w(Matrix::Zero(2, 2), SpaceDescriptor::lp(2.0, 3), l2);
    CHECK_THROWS_AS(lattice_leq(u, w), DimensionMismatch);
    CoeffTensor small(Matrix::Zero(1, 2), l2, l2);
    CHECK_THROWS_AS(lattice_join(u, small), DimensionMismatch);
}

TEST_CASE("lattice norm compatibility") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> un(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        Matrix big(3, 3), shrunk(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                big(i, j) = g(rng);
                shrunk(i, j) = big(i, j) * un(rng);
            }
        SpaceDescriptor s = SpaceDescriptor::lp(2.0, 3);
        CoeffTensor u(shrunk, s, s), v(big, s, s);
        REQUIRE(lattice_leq(lattice_abs(u), lattice_abs(v)));
        CHECK(besselian_crossnorm(u).value <=
              besselian_crossnorm(v).value + 1e-9);
    }
}

TEST_CASE("identification values") {
    Matrix m(2, 2);
    m << 1, -1, 0, 0;
    CHECK(iso_c0_c0(CoeffTensor(m, c02, c02)) == doctest::Approx(1.0));
    CHECK(iso_l1_l1(CoeffTensor(m, l1, l1)) == doctest::Approx(2.0));
    CHECK(iso_c0_F(CoeffTensor(m, c02, l2)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(iso_lp_l1(CoeffTensor(Matrix::Ones(2, 2), l2, l1)) ==
          doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("identifications agree with the crossnorm") {
    std::mt19937_64 rng(37);
    std::normal_distribution<double> g;
    for (int t = 0; t < 100; ++t) {
        int k = 1 + int(rng() % 5), kp = 1 + int(rng() % 5);
        Matrix lam(k, kp);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < kp; ++j) lam(i, j) = g(rng);

        CoeffTensor uc(lam, SpaceDescriptor::c0(k), SpaceDescriptor::c0(kp));
        CHECK(iso_c0_c0(uc) ==
              doctest::Approx(besselian_crossnorm(uc).value).epsilon(1e-10));

        CoeffTensor u1(lam, SpaceDescriptor::lp(1.0, k), SpaceDescriptor::lp(1.0, kp));
        CHECK(iso_l1_l1(u1) ==
              doctest::Approx(besselian_crossnorm(u1).value).epsilon(1e-10));

        CoeffTensor up(lam, SpaceDescriptor::lp(2.5, k), SpaceDescriptor::lp(1.0, kp));
        CHECK(iso_lp_l1(up) ==
              doctest::Approx(besselian_crossnorm(up).value).epsilon(1e-8));

        CoeffTensor uf(lam, SpaceDescriptor::c0(k), SpaceDescriptor::lp(2.0, kp));
        CHECK(iso_c0_F(uf) ==
              doctest::Approx(besselian_crossnorm(uf).value).epsilon(1e-8));
    }
}

TEST_CASE("identifications validate space kinds") {
    Matrix m = Matrix::Ones(2, 2);
    CHECK_THROWS_AS(iso_c0_c0(CoeffTensor(m, l2, c02)), std::invalid_argument);
    CHECK_THROWS_AS(iso_l1_l1(CoeffTensor(m, l2, l1)), std::invalid_argument);
    CHECK_THROWS_AS(iso_lp_l1(CoeffTensor(m, SpaceDescriptor::lp_inf(2), l1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(iso_lp_l1(CoeffTensor(m, l2, l2)), std::invalid_argument);
    CHECK_THROWS_AS(iso_c0_F(CoeffTensor(m, l2, l2)), std::invalid_argument);
}
