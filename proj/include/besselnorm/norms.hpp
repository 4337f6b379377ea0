#pragma once

#include "besselnorm/frames.hpp"
#include "besselnorm/opnorm.hpp"
#include "besselnorm/tensor.hpp"

namespace besselnorm {

/// Injective norm ε(u) = sup over dual-unit f, g of |f^T λ g|
/// = ‖λ‖_{ℓ_{q*} → ℓ_p} with q the right exponent and p the left.
NormResult injective_norm(const CoeffTensor& u, const KernelConfig& cfg = {});

/// Besselian crossnorm on basis spans (canonical systems):
/// α(u) = sup over dual-unit f, g of Σ_{ij} |λ_{ij}| |f_i| |g_j|
/// = ‖|λ|‖_{ℓ_{q*} → ℓ_p}. The inner sup over f of a nonnegative linear
/// form is attained at a nonnegative Hölder witness, which is what folds
/// the absolute values into the matrix.
NormResult besselian_crossnorm(const CoeffTensor& u, const KernelConfig& cfg = {});

/// Projective norm π(u). Exact when either factor is ℓ₁ (the ℓ₁(F)
/// identification) or both are ℓ₂ (nuclear norm); otherwise a Bracket
/// with an upper bound from a representation search and the injective
/// lower bound.
NormResult projective_norm(const CoeffTensor& u, const KernelConfig& cfg = {});

/// Hilbert-Schmidt (Frobenius) norm of the coefficient matrix.
double hs_norm(const CoeffTensor& u);

/// Bess(Σ_r x^r ⊗ y^r) = sup over dual-unit f, g of
/// Σ_r Σ_{mn} |b_m*(x^r) y_n*(y^r) f*(a_m) g*(x_n)|. Reduces to the
/// operator norm of M = Σ_r |B_L^T x^r| |B_R^T y^r|^T conjugated by the
/// frame matrices; exact for canonical (or entrywise-nonnegative) frames,
/// sign enumeration over both frames otherwise.
NormResult bess_functional_of_rank_rep(const RankRep& rep, const BiorthogonalSystem& sys_l,
                                       const BiorthogonalSystem& sys_r,
                                       const KernelConfig& cfg = {});

/// Bracket for the infimum-over-representations definition of the
/// crossnorm: upper = min of Bess over a representation search (the input
/// rep, its coefficient-basis expansion, and `budget` random remixtures);
/// lower = the closed-form value on the coefficient matrix. For canonical
/// systems the two coincide.
NormResult besselian_crossnorm_upper(const RankRep& rep, const BiorthogonalSystem& sys_l,
                                     const BiorthogonalSystem& sys_r, int budget = 200,
                                     const KernelConfig& cfg = {});

/// Expansion of a coefficient tensor in the frame vectors:
/// u = Σ_i a_i ⊗ (Σ_j λ_{ij} x_j).
RankRep coeff_expansion_rep(const CoeffTensor& u, const BiorthogonalSystem& sys_l,
                            const BiorthogonalSystem& sys_r);

/// The non-uniformity construction: u = e₁⊗e₁ + e₂⊗e₂ in ℓ₂⊗ℓ₂,
/// S = √2·(rotation by 45°) with ‖S‖ = √2, T = I, v = (S⊗T)u.
/// α(v) = 2 > √2 = ‖S‖‖T‖α(u), so the crossnorm is not uniform.
struct UniformityDemo {
    double alpha_u = 0.0;
    double alpha_v = 0.0;
    double operator_bound = 0.0;  // ‖S‖ ‖T‖ α(u)
    bool violated = false;
};

UniformityDemo uniformity_violation_demo(const KernelConfig& cfg = {});

}  // namespace besselnorm
