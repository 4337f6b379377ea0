#pragma once

#include "besselnorm/opnorm.hpp"
#include "besselnorm/spaces.hpp"

#include <vector>

namespace besselnorm {

/// Finite biorthogonal system ((a_m, b_m*)): columns of A are the frame
/// vectors, columns of B the coordinate representations of the
/// functionals, paired through the Euclidean inner product. Construction
/// rejects systems with B^T A far from the identity instead of repairing
/// them.
struct BiorthogonalSystem {
    SpaceDescriptor ambient;
    Matrix A;  // d x M
    Matrix B;  // d x M

    BiorthogonalSystem(SpaceDescriptor space, Matrix a, Matrix b,
                       double biorth_tol = 1e-10);

    int frame_size() const { return static_cast<int>(A.cols()); }
};

/// The canonical basis as a self-biorthogonal system: A = B = I.
BiorthogonalSystem canonical_system(const SpaceDescriptor& space);

/// Frame coefficients (b_m*(x))_m = B^T x.
ColVec frame_expand(const BiorthogonalSystem& sys, const Vector& x);

/// ‖x‖^Bess = sup over dual-unit f* of Σ_m |b_m*(x)| |f*(a_m)|.
/// Exact: dual-vertex enumeration for ℓ_∞/c₀ ambient, the all-ones sign
/// shortcut for entrywise-nonnegative A, sign enumeration otherwise
/// (throws CapExceeded beyond the cap).
double besselian_vector_norm(const BiorthogonalSystem& sys, const Vector& x,
                             const KernelConfig& cfg = {});

/// Operator norm on the ambient space of T_s = A diag(s) B^T.
NormResult sign_operator_norm(const BiorthogonalSystem& sys, const SignVector& s,
                              const KernelConfig& cfg = {});

/// Besselian constant L = sup_{unit x, unit f*} Σ_m |b_m*(x)| |f*(a_m)|
/// = max over sign patterns of ‖T_s‖. Exact when every sign-operator norm
/// is exact (ℓ₁, ℓ₂, ℓ_∞/c₀ ambient); bracketed otherwise. The maximizing
/// sign pattern is returned through `signs`.
NormResult besselian_constant(const BiorthogonalSystem& sys, SignVector* signs = nullptr,
                              const KernelConfig& cfg = {});

/// max over s in {±1}^M of sign_operator_norm(sys, s).
NormResult unconditional_constant(const BiorthogonalSystem& sys,
                                  SignVector* signs = nullptr,
                                  const KernelConfig& cfg = {});

struct FrameConstants {
    NormResult besselian;
    NormResult unconditional;
    SignVector besselian_signs;
    SignVector unconditional_signs;
};

FrameConstants frame_constants(const BiorthogonalSystem& sys, const KernelConfig& cfg = {});

/// Finite-scale unconditionality tail test: checks that
///   max over A ⊆ {M0+1..M}, signs λ of ‖Σ_{m∈A} λ_m b_m*(x) a_m‖ < eps.
/// Subset choice and sign choice combine into λ ∈ {−1,0,+1}^{M−M0}.
struct TailCheckResult {
    bool ok = true;
    double max_norm = 0.0;
    std::vector<int> witness;  // the maximizing {−1,0,+1} pattern over the tail
};

TailCheckResult tail_unconditionality_check(const BiorthogonalSystem& sys, const Vector& x,
                                            int m0, double eps,
                                            const KernelConfig& cfg = {});

/// Sampled estimate of the dual Besselian norm
///   ‖f‖^Bess_dual = sup_{x≠0} |f(x)| / ‖x‖^Bess,
/// over random directions plus the Hölder witness of ‖f‖_dual. A lower
/// bound of the true sup; the Hölder sample guarantees it is at least
/// ‖f‖_dual / L.
double besselian_dual_norm_estimate(const BiorthogonalSystem& sys, const Vector& f,
                                    int samples = 200, std::uint64_t seed = 0xBE55,
                                    const KernelConfig& cfg = {});

}  // namespace besselnorm
