#include "besselnorm/tensor.hpp"

namespace besselnorm {

CoeffTensor rank_rep_to_coeffs(const RankRep& rep, const BiorthogonalSystem& sys_l,
                               const BiorthogonalSystem& sys_r) {
    if (!(sys_l.ambient == rep.left) || !(sys_r.ambient == rep.right))
        throw DimensionMismatch("rank_rep_to_coeffs: frame spaces do not match rep");
    const int ml = sys_l.frame_size();
    const int mr = sys_r.frame_size();
    Matrix lam = Matrix::Zero(ml, mr);
    for (const auto& [x, y] : rep.pairs) {
        ColVec c = sys_l.B.transpose() * x.coords;
        ColVec d = sys_r.B.transpose() * y.coords;
        lam += c * d.transpose();
    }
    return CoeffTensor(std::move(lam), rep.left, rep.right);
}

double pair_with_functionals(const CoeffTensor& u, const ColVec& f, const ColVec& g) {
    if (f.size() != u.lam.rows() || g.size() != u.lam.cols())
        throw DimensionMismatch("pair_with_functionals: functional dims do not match");
    return f.dot(u.lam * g);
}

CoeffTensor sign_flip(const CoeffTensor& u, const Matrix& eps) {
    if (eps.rows() != u.lam.rows() || eps.cols() != u.lam.cols())
        throw DimensionMismatch("sign_flip: shape mismatch");
    if (!((eps.array() == 1.0) || (eps.array() == -1.0)).all())
        throw std::invalid_argument("sign_flip: entries must be ±1");
    return CoeffTensor(u.lam.cwiseProduct(eps), u.left, u.right);
}

CoeffTensor apply_operator_pair(const CoeffTensor& u, const Matrix& s, const Matrix& t) {
    if (s.cols() < u.lam.rows() || t.cols() < u.lam.cols())
        throw DimensionMismatch("apply_operator_pair: operators smaller than tensor block");
    if (s.rows() > u.left.dim || t.rows() > u.right.dim)
        throw DimensionMismatch("apply_operator_pair: operators exceed ambient dims");
    Matrix padded = Matrix::Zero(s.cols(), t.cols());
    padded.topLeftCorner(u.lam.rows(), u.lam.cols()) = u.lam;
    return CoeffTensor(s * padded * t.transpose(), u.left, u.right);
}

}  // namespace besselnorm
