#pragma once

#include "besselnorm/norms.hpp"

#include <functional>
#include <string>
#include <vector>

namespace besselnorm {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;  // counterexample or summary
};

/// Replaceable entry points, used by tests to inject faults and confirm
/// the suites actually detect them.
struct VerifyHooks {
    std::function<NormResult(const CoeffTensor&, const KernelConfig&)> alpha =
        [](const CoeffTensor& u, const KernelConfig& c) {
            return besselian_crossnorm(u, c);
        };
};

struct VerifyConfig {
    std::uint64_t seed = 0xBE55;
    KernelConfig kernel{};
    int samples = 1000;  // instances per randomized property
};

std::vector<PropertyResult> verify_axioms(const VerifyConfig& cfg = {},
                                          const VerifyHooks& hooks = {});
std::vector<PropertyResult> verify_paper(const VerifyConfig& cfg = {});
std::vector<PropertyResult> verify_lattice(const VerifyConfig& cfg = {});
std::vector<PropertyResult> verify_frames(const VerifyConfig& cfg = {});
std::vector<PropertyResult> verify_all(const VerifyConfig& cfg = {});

/// Brute-force reference for ‖A‖_{ℓ_r → ℓ_p}, kept independent of the
/// kernel's closed forms: vertex enumeration for polytope domains and
/// multi-start projected gradient ascent (with row-witness starts)
/// otherwise. A certified-enough lower bound that matches the exact paths
/// at desk scale.
double oracle_operator_norm(const Matrix& a, const Exponent& from, const Exponent& to,
                            std::uint64_t seed = 0xBE55);

/// Reference for the tail unconditionality max: explicit recursion over
/// subsets of the tail and sign choices on each subset.
double oracle_tail_max(const BiorthogonalSystem& sys, const Vector& x, int m0);

}  // namespace besselnorm
