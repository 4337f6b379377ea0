#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "besselnorm/verify.hpp"

using namespace besselnorm;

namespace {

VerifyConfig quick() {
    VerifyConfig cfg;
    cfg.samples = 25;  // keep the unit-test run fast; full runs happen in acceptance
    return cfg;
}

int failures(const std::vector<PropertyResult>& rs) {
    int n = 0;
    for (const auto& r : rs)
        if (!r.passed) ++n;
    return n;
}

}  // namespace

TEST_CASE("all suites pass with the default alpha") {
    auto ax = verify_axioms(quick());
    CHECK(failures(ax) == 0);
    CHECK(ax.size() >= 8);

    auto pp = verify_paper(quick());
    CHECK(failures(pp) == 0);

    auto la = verify_lattice(quick());
    CHECK(failures(la) == 0);

    auto fr = verify_frames(quick());
    CHECK(failures(fr) == 0);

    auto all = verify_all(quick());
    CHECK(all.size() == ax.size() + pp.size() + la.size() + fr.size());
    CHECK(failures(all) == 0);
}

TEST_CASE("seeds are reproducible and varied") {
    VerifyConfig a = quick(), b = quick(), c = quick();
    c.seed = 0xDEAD;
    auto ra = verify_axioms(a);
    auto rb = verify_axioms(b);
    auto rc = verify_axioms(c);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].passed == rb[i].passed);
        CHECK(ra[i].detail == rb[i].detail);
    }
    CHECK(failures(rc) == 0);  // a different seed still passes
}

TEST_CASE("fault injection is detected") {
    // deflating alpha must break the sandwich against the injective norm
    VerifyHooks deflate;
    deflate.alpha = [](const CoeffTensor& u, const KernelConfig& c) {
        NormResult r = besselian_crossnorm(u, c);
        r.value *= 0.5;
        r.lower = r.upper = r.value;
        return r;
    };
    auto rs = verify_axioms(quick(), deflate);
    bool sandwich_failed = false;
    for (const auto& r : rs)
        if (r.name == "sandwich_eps_le_alpha_le_pi" && !r.passed) {
            sandwich_failed = true;
            CHECK_FALSE(r.detail.empty());  // counterexample is reported
        }
    CHECK(sandwich_failed);

    // inflating alpha must break the pi side / coincidence checks instead
    VerifyHooks inflate;
    inflate.alpha = [](const CoeffTensor& u, const KernelConfig& c) {
        NormResult r = besselian_crossnorm(u, c);
        r.value *= 3.0;
        r.lower = r.upper = r.value;
        return r;
    };
    CHECK(failures(verify_axioms(quick(), inflate)) > 0);
}
