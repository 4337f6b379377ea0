#include "besselnorm/lattice.hpp"

namespace besselnorm {

namespace {

void check_shapes(const CoeffTensor& u, const CoeffTensor& v, const char* who) {
    if (u.lam.rows() != v.lam.rows() || u.lam.cols() != v.lam.cols() ||
        !(u.left == v.left) || !(u.right == v.right))
        throw DimensionMismatch(std::string(who) + ": shape or space mismatch");
}

}  // namespace

bool lattice_leq(const CoeffTensor& u, const CoeffTensor& v) {
    check_shapes(u, v, "lattice_leq");
    return (u.lam.array() <= v.lam.array()).all();
}

CoeffTensor lattice_join(const CoeffTensor& u, const CoeffTensor& v) {
    check_shapes(u, v, "lattice_join");
    return CoeffTensor(u.lam.cwiseMax(v.lam), u.left, u.right);
}

CoeffTensor lattice_meet(const CoeffTensor& u, const CoeffTensor& v) {
    check_shapes(u, v, "lattice_meet");
    return CoeffTensor(u.lam.cwiseMin(v.lam), u.left, u.right);
}

CoeffTensor lattice_abs(const CoeffTensor& u) {
    return CoeffTensor(u.lam.cwiseAbs(), u.left, u.right);
}

double iso_c0_c0(const CoeffTensor& u) {
    if (u.left.kind != SpaceKind::C0 || u.right.kind != SpaceKind::C0)
        throw std::invalid_argument("iso_c0_c0: both factors must be c0");
    return u.lam.cwiseAbs().maxCoeff();
}

double iso_l1_l1(const CoeffTensor& u) {
    if (!u.left.exponent.is_one() || !u.right.exponent.is_one())
        throw std::invalid_argument("iso_l1_l1: both factors must be l1");
    return u.lam.cwiseAbs().sum();
}

double iso_lp_l1(const CoeffTensor& u) {
    if (u.left.kind != SpaceKind::Lp || u.left.exponent.is_infinite())
        throw std::invalid_argument("iso_lp_l1: left factor must be lp, p finite");
    if (!u.right.exponent.is_one())
        throw std::invalid_argument("iso_lp_l1: right factor must be l1");
    ColVec row_l1(u.lam.rows());
    for (Eigen::Index i = 0; i < u.lam.rows(); ++i)
        row_l1[i] = u.lam.row(i).cwiseAbs().sum();
    return lp_norm(row_l1, u.left.exponent);
}

double iso_c0_F(const CoeffTensor& u) {
    if (u.left.kind != SpaceKind::C0)
        throw std::invalid_argument("iso_c0_F: left factor must be c0");
    double best = 0.0;
    for (Eigen::Index i = 0; i < u.lam.rows(); ++i)
        best = std::max(best, lp_norm(u.lam.row(i).transpose(), u.right.exponent));
    return best;
}

}  // namespace besselnorm
