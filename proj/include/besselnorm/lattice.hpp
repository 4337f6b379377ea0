#pragma once

#include "besselnorm/tensor.hpp"

namespace besselnorm {

/// Entrywise partial order on coefficient tensors sharing exact shape and
/// spaces. No implicit padding.
bool lattice_leq(const CoeffTensor& u, const CoeffTensor& v);

CoeffTensor lattice_join(const CoeffTensor& u, const CoeffTensor& v);
CoeffTensor lattice_meet(const CoeffTensor& u, const CoeffTensor& v);
CoeffTensor lattice_abs(const CoeffTensor& u);

/// c₀ ⊗ c₀ = c₀ identification: max_{ij} |λ_{ij}|.
double iso_c0_c0(const CoeffTensor& u);

/// ℓ₁ ⊗ ℓ₁ = ℓ₁ identification: Σ_{ij} |λ_{ij}|.
double iso_l1_l1(const CoeffTensor& u);

/// ℓ_p ⊗ ℓ₁ = ℓ_p(ℓ₁) identification: (Σ_i ‖row_i‖₁^p)^{1/p}.
double iso_lp_l1(const CoeffTensor& u);

/// c₀ ⊗ F = c₀(F) identification: max_i ‖row_i‖_F.
double iso_c0_F(const CoeffTensor& u);

}  // namespace besselnorm
