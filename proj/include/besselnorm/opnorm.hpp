#pragma once

#include "besselnorm/spaces.hpp"

#include <cstdint>
#include <string>

namespace besselnorm {

enum class Certificate { Exact, Bracket };

/// Result of a norm computation. `value` is always the certified lower
/// bound; for Exact results lower == upper == value. Witnesses are
/// dual-feasible functionals reproducing `value` when Exact.
struct NormResult {
    double value = 0.0;
    Certificate certificate = Certificate::Exact;
    double lower = 0.0;
    double upper = 0.0;
    ColVec witness_f;
    ColVec witness_g;
    std::string method;
    int iterations = 0;

    static NormResult exact(double v, std::string method) {
        NormResult r;
        r.value = r.lower = r.upper = v;
        r.method = std::move(method);
        return r;
    }
    static NormResult bracket(double lo, double hi, std::string method) {
        NormResult r;
        r.certificate = Certificate::Bracket;
        r.value = r.lower = lo;
        r.upper = hi;
        r.method = std::move(method);
        return r;
    }
    bool is_exact() const { return certificate == Certificate::Exact; }
};

/// Tuning knobs shared by every iterative / enumerative kernel path.
struct KernelConfig {
    std::uint64_t sign_cap = std::uint64_t(1) << 20;
    std::uint64_t tail_cap = std::uint64_t(1) << 20;
    std::uint64_t seed = 0xBE55;
    int power_starts = 32;
    int power_max_iter = 10000;
    double power_tol = 1e-12;
};

/// ‖A‖_{ℓ_r → ℓ_p} = sup_{‖g‖_r ≤ 1} ‖Ag‖_p.
struct OperatorNormQuery {
    Matrix matrix;
    Exponent from;  // r, domain
    Exponent to;    // p, codomain
    KernelConfig config{};
};

/// Computes ‖A‖_{ℓ_r → ℓ_p}. Exact paths:
///   r = 1            max over columns of ‖A e_j‖_p
///   p = ∞            max over rows of ‖row_i‖_{r*}
///   r = ∞            sign-vertex enumeration g ∈ {±1}^{cols} (within cap)
///   r = p = 2        largest singular value
/// Otherwise a Bracket: lower from multi-start power iteration, upper
/// from interpolation products of exact endpoint norms and the spectral
/// dimension bound. witness_g is the maximizing domain vector, witness_f
/// the dual functional attaining ‖A g‖_p.
NormResult operator_norm(const OperatorNormQuery& q);

/// Hölder extremizer: for c ≥ 0 returns dual-unit f ≥ 0 with
/// Σ c_i f_i = ‖c‖_p (f_i ∝ c_i^{p−1} for finite p > 1, indicator of a
/// max coordinate for p = ∞, all-ones for p = 1).
ColVec holder_witness(const ColVec& c, const Exponent& p);

}  // namespace besselnorm
