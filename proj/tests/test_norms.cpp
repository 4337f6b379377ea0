#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "besselnorm/norms.hpp"

#include <cmath>
#include <random>

using namespace besselnorm;

namespace {

const SpaceDescriptor l2 = SpaceDescriptor::lp(2.0, 2);
const SpaceDescriptor l1 = SpaceDescriptor::lp(1.0, 2);
const SpaceDescriptor c0 = SpaceDescriptor::c0(2);

Matrix diag_u() { return Matrix::Identity(2, 2); }

Matrix rotation_v() {
    Matrix m(2, 2);
    m << 1, 1, -1, 1;
    return m;
}

Matrix skew() {
    Matrix m(2, 2);
    m << 3, -1, 0, 2;
    return m;
}

}  // namespace

TEST_CASE("classical-space worked examples") {
    const double rt2 = std::sqrt(2.0);
    CoeffTensor u(diag_u(), l2, l2);
    CoeffTensor v(rotation_v(), l2, l2);

    CHECK(besselian_crossnorm(u).value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(projective_norm(u).value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(injective_norm(u).value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(injective_norm(v).value == doctest::Approx(rt2).epsilon(1e-10));
    CHECK(besselian_crossnorm(v).value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(hs_norm(u) == doctest::Approx(rt2));
    CHECK(hs_norm(v) == doctest::Approx(2.0));

    CoeffTensor w0(skew(), c0, c0);
    CHECK(besselian_crossnorm(w0).value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(injective_norm(w0).value == doctest::Approx(3.0).epsilon(1e-12));

    CoeffTensor w1(skew(), l1, l1);
    CHECK(besselian_crossnorm(w1).value == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(projective_norm(w1).value == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("injective and besselian results are certified") {
    NormResult e = injective_norm(CoeffTensor(rotation_v(), l2, l2));
    CHECK(e.is_exact());
    CHECK(e.witness_f.size() == 2);
    // the witnesses realize the injective value as a pairing
    CHECK(std::abs(e.witness_f.dot(rotation_v() * e.witness_g)) ==
          doctest::Approx(e.value).epsilon(1e-9));

    // a pair without a closed form brackets instead of guessing
    SpaceDescriptor l3 = SpaceDescriptor::lp(3.0, 3);
    SpaceDescriptor l4 = SpaceDescriptor::lp(4.0, 3);
    CoeffTensor t(Matrix::Random(3, 3), l3, l4);
    NormResult a = besselian_crossnorm(t);
    CHECK(a.lower <= a.upper);
    NormResult inj = injective_norm(t);
    CHECK(inj.lower <= a.upper + 1e-9);  // sandwich survives bracketing
}

TEST_CASE("projective norm paths") {
    // zero tensor
    CHECK(projective_norm(CoeffTensor(Matrix::Zero(2, 2), l2, l2)).value == 0.0);

    // l1 factor: sum of row norms, exact
    Matrix m(2, 2);
    m << 1, 2, -2, 1;
    NormResult p1 = projective_norm(CoeffTensor(m, l1, l2));
    CHECK(p1.is_exact());
    CHECK(p1.value == doctest::Approx(2.0 * std::sqrt(5.0)));
    NormResult p2 = projective_norm(CoeffTensor(m, l2, l1));
    CHECK(p2.is_exact());
    CHECK(p2.value == doctest::Approx(2.0 * std::sqrt(5.0)));

    // (2,2): nuclear norm
    NormResult pn = projective_norm(CoeffTensor(rotation_v(), l2, l2));
    CHECK(pn.is_exact());
    CHECK(pn.value == doctest::Approx(2.0 * std::sqrt(2.0)));

    // no closed form: bracket containing the injective lower bound
    SpaceDescriptor l3 = SpaceDescriptor::lp(3.0, 2);
    CoeffTensor t(rotation_v(), l3, l3);
    NormResult pb = projective_norm(t);
    CHECK_FALSE(pb.is_exact());
    CHECK(pb.lower <= pb.upper);
    CHECK(pb.lower >= injective_norm(t).value - 1e-9);
    // the rank-one row expansion bounds pi from above
    CHECK(pb.upper <= 2.0 * lp_norm(rotation_v().row(0).transpose(),
                                    Exponent::finite(3.0)) + 1e-9);
}

TEST_CASE("coefficient expansion representation") {
    auto sys = canonical_system(l2);
    Matrix m(2, 2);
    m << 1, 2, 3, 4;
    CoeffTensor u(m, l2, l2);
    RankRep rep = coeff_expansion_rep(u, sys, sys);
    CoeffTensor back = rank_rep_to_coeffs(rep, sys, sys);
    CHECK((back.lam - m).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Bess functional of rank reps") {
    auto sys = canonical_system(l2);
    ColVec e1 = ColVec::Zero(2), e2 = ColVec::Zero(2);
    e1[0] = 1;
    e2[1] = 1;

    // 2 e1⊗e1 split into two identical pairs: the functional sees the sum
    std::vector<std::pair<Vector, Vector>> twice;
    twice.emplace_back(Vector(e1, l2), Vector(e1, l2));
    twice.emplace_back(Vector(e1, l2), Vector(e1, l2));
    NormResult b = bess_functional_of_rank_rep(RankRep(twice, l2, l2), sys, sys);
    CHECK(b.is_exact());
    CHECK(b.value == doctest::Approx(2.0).epsilon(1e-10));

    // canonical diagonal rep reproduces alpha
    std::vector<std::pair<Vector, Vector>> diag;
    diag.emplace_back(Vector(e1, l2), Vector(e1, l2));
    diag.emplace_back(Vector(e2, l2), Vector(e2, l2));
    CHECK(bess_functional_of_rank_rep(RankRep(diag, l2, l2), sys, sys).value ==
          doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(bess_functional_of_rank_rep(RankRep({}, l2, l2),
                                                canonical_system(SpaceDescriptor::lp(2.0, 3)),
                                                sys),
                    DimensionMismatch);
}

TEST_CASE("representation infimum bracket") {
    auto sys = canonical_system(l2);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (int t = 0; t < 20; ++t) {
        std::vector<std::pair<Vector, Vector>> pairs;
        int npairs = 1 + int(rng() % 3);
        for (int r = 0; r < npairs; ++r) {
            ColVec x(2), y(2);
            for (int i = 0; i < 2; ++i) {
                x[i] = g(rng);
                y[i] = g(rng);
            }
            pairs.emplace_back(Vector(x, l2), Vector(y, l2));
        }
        RankRep rep(pairs, l2, l2);
        NormResult res = besselian_crossnorm_upper(rep, sys, sys, 50);
        // canonical systems: the coefficient-basis expansion closes the gap
        CHECK(res.upper - res.lower <= 1e-6 * (1.0 + res.lower));
        CoeffTensor u = rank_rep_to_coeffs(rep, sys, sys);
        CHECK(res.lower == doctest::Approx(besselian_crossnorm(u).value).epsilon(1e-9));
    }
}

TEST_CASE("uniformity violation demo") {
    UniformityDemo d = uniformity_violation_demo();
    CHECK(d.alpha_u == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(d.alpha_v == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(d.operator_bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(d.violated);
}
