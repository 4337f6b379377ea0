#pragma once

#include "besselnorm/frames.hpp"
#include "besselnorm/spaces.hpp"

#include <vector>

namespace besselnorm {

/// Tensor in span{a_i ⊗ x_j} as its k×k′ coefficient matrix. k and k′
/// may be smaller than the ambient dims (the tensor lives in a leading
/// block); norms are invariant under zero-padding.
struct CoeffTensor {
    Matrix lam;  // k x k'
    SpaceDescriptor left;
    SpaceDescriptor right;

    CoeffTensor(Matrix l, SpaceDescriptor le, SpaceDescriptor ri)
        : lam(std::move(l)), left(le), right(ri) {
        if (lam.rows() < 1 || lam.cols() < 1)
            throw std::invalid_argument("CoeffTensor: k, k' must be >= 1");
        if (lam.rows() > left.dim || lam.cols() > right.dim)
            throw DimensionMismatch("CoeffTensor: coefficient block exceeds ambient dims");
        if (!lam.allFinite())
            throw std::invalid_argument("CoeffTensor: entries must be finite");
    }
};

/// Rank-R representation Σ_r x^r ⊗ y^r. Empty list is the zero tensor.
struct RankRep {
    std::vector<std::pair<Vector, Vector>> pairs;
    SpaceDescriptor left;
    SpaceDescriptor right;

    RankRep(std::vector<std::pair<Vector, Vector>> p, SpaceDescriptor le,
            SpaceDescriptor ri)
        : pairs(std::move(p)), left(le), right(ri) {
        for (const auto& [x, y] : pairs) {
            if (!(x.space == left) || !(y.space == right))
                throw DimensionMismatch("RankRep: pair spaces do not match");
        }
    }
};

/// λ_{ij} = Σ_r b_i*(x^r) y_j*(y^r); the outer-product sum for canonical
/// systems.
CoeffTensor rank_rep_to_coeffs(const RankRep& rep, const BiorthogonalSystem& sys_l,
                               const BiorthogonalSystem& sys_r);

/// Action of f* ⊗ g* through the canonical bases: f^T λ g.
double pair_with_functionals(const CoeffTensor& u, const ColVec& f, const ColVec& g);

/// Entrywise λ_{ij} ↦ eps_{ij} λ_{ij} with eps over {±1}.
CoeffTensor sign_flip(const CoeffTensor& u, const Matrix& eps);

/// Coefficient matrix of (S ⊗ T)(u): λ′ = S λ T^T.
CoeffTensor apply_operator_pair(const CoeffTensor& u, const Matrix& s, const Matrix& t);

}  // namespace besselnorm
