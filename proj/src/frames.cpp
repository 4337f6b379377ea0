#include "besselnorm/frames.hpp"

#include <cmath>
#include <random>

namespace besselnorm {

namespace {

void check_sign_cap(int m, std::uint64_t cap, const char* who) {
    if (m >= 63 || (std::uint64_t(1) << std::max(m - 1, 0)) > cap)
        throw CapExceeded(std::string(who) + ": 2^M exceeds sign enumeration cap");
}

/// Enumerates s in {±1}^M with s_1 pinned to +1 (the norm is symmetric
/// under s -> -s); calls fn(s) for each pattern in lexicographic order.
template <typename Fn>
void for_each_sign_pattern(int m, Fn&& fn) {
    SignVector s(m, 1);
    const std::uint64_t count = m > 1 ? (std::uint64_t(1) << (m - 1)) : 1;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (int j = 1; j < m; ++j) s[j] = (mask >> (j - 1)) & 1 ? -1 : 1;
        fn(s);
    }
}

Matrix sign_conjugate(const BiorthogonalSystem& sys, const SignVector& s) {
    Matrix m = sys.A;
    for (int j = 0; j < sys.frame_size(); ++j) m.col(j) *= double(s[j]);
    return m * sys.B.transpose();
}

}  // namespace

BiorthogonalSystem::BiorthogonalSystem(SpaceDescriptor space, Matrix a, Matrix b,
                                       double biorth_tol)
    : ambient(space), A(std::move(a)), B(std::move(b)) {
    if (A.rows() != ambient.dim || B.rows() != ambient.dim)
        throw DimensionMismatch("BiorthogonalSystem: matrix rows != ambient dim");
    if (A.cols() != B.cols())
        throw DimensionMismatch("BiorthogonalSystem: A and B must have equal frame size");
    if (A.cols() > A.rows())
        throw std::invalid_argument("BiorthogonalSystem: M > d is not supported");
    Matrix gram = B.transpose() * A;
    Matrix err = gram - Matrix::Identity(gram.rows(), gram.cols());
    if (err.size() > 0 && err.cwiseAbs().maxCoeff() > biorth_tol)
        throw std::invalid_argument("BiorthogonalSystem: B^T A deviates from identity");
}

BiorthogonalSystem canonical_system(const SpaceDescriptor& space) {
    Matrix id = Matrix::Identity(space.dim, space.dim);
    return BiorthogonalSystem(space, id, id);
}

ColVec frame_expand(const BiorthogonalSystem& sys, const Vector& x) {
    if (x.space.dim != sys.ambient.dim)
        throw DimensionMismatch("frame_expand: vector dim != ambient dim");
    return sys.B.transpose() * x.coords;
}

double besselian_vector_norm(const BiorthogonalSystem& sys, const Vector& x,
                             const KernelConfig& cfg) {
    ColVec c = frame_expand(sys, x).cwiseAbs();
    const int m = sys.frame_size();
    const Exponent& e = sys.ambient.exponent;

    if (e.is_infinite()) {
        // dual ball vertices are ±e_i: sup = max_i Σ_m c_m |A(i,m)|
        return (sys.A.cwiseAbs() * c).maxCoeff();
    }
    // sup_f Σ c_m |f^T a_m| = max_s ‖A (c ⊙ s)‖_E
    if ((sys.A.array() >= 0.0).all()) {
        return lp_norm(sys.A * c, e);
    }
    check_sign_cap(m, cfg.sign_cap, "besselian_vector_norm");
    double best = 0.0;
    for_each_sign_pattern(m, [&](const SignVector& s) {
        ColVec v(m);
        for (int j = 0; j < m; ++j) v[j] = c[j] * double(s[j]);
        best = std::max(best, lp_norm(sys.A * v, e));
    });
    return best;
}

NormResult sign_operator_norm(const BiorthogonalSystem& sys, const SignVector& s,
                              const KernelConfig& cfg) {
    if (static_cast<int>(s.size()) != sys.frame_size())
        throw DimensionMismatch("sign_operator_norm: sign length != frame size");
    for (int v : s)
        if (v != 1 && v != -1)
            throw std::invalid_argument("sign_operator_norm: entries must be ±1");
    OperatorNormQuery q{sign_conjugate(sys, s), sys.ambient.exponent,
                        sys.ambient.exponent, cfg};
    return operator_norm(q);
}

namespace {

NormResult max_over_signs(const BiorthogonalSystem& sys, SignVector* signs,
                          const KernelConfig& cfg, const char* who) {
    const int m = sys.frame_size();
    check_sign_cap(m, cfg.sign_cap, who);
    NormResult best;
    double max_lower = -1.0;
    double max_upper = -1.0;
    bool all_exact = true;
    SignVector best_s;
    for_each_sign_pattern(m, [&](const SignVector& s) {
        NormResult r = sign_operator_norm(sys, s, cfg);
        if (r.lower > max_lower) {
            max_lower = r.lower;
            best_s = s;
            best = r;
        }
        max_upper = std::max(max_upper, r.upper);
        all_exact = all_exact && r.is_exact();
    });
    best.value = best.lower = max_lower;
    best.upper = all_exact ? max_lower : max_upper;
    best.certificate = all_exact ? Certificate::Exact : Certificate::Bracket;
    best.method = std::string(who) + "/" + best.method;
    ColVec sw(m);
    for (int j = 0; j < m; ++j) sw[j] = double(best_s[j]);
    best.witness_g = sw;
    if (signs) *signs = best_s;
    return best;
}

}  // namespace

NormResult besselian_constant(const BiorthogonalSystem& sys, SignVector* signs,
                              const KernelConfig& cfg) {
    // L = sup_{x,f} Σ_m |b_m*(x)||f*(a_m)|; fixing the sign pattern of the
    // products linearizes the absolute values, so L = max_s ‖A diag(s) B^T‖.
    return max_over_signs(sys, signs, cfg, "besselian_constant");
}

NormResult unconditional_constant(const BiorthogonalSystem& sys, SignVector* signs,
                                  const KernelConfig& cfg) {
    return max_over_signs(sys, signs, cfg, "unconditional_constant");
}

FrameConstants frame_constants(const BiorthogonalSystem& sys, const KernelConfig& cfg) {
    FrameConstants fc;
    fc.besselian = besselian_constant(sys, &fc.besselian_signs, cfg);
    fc.unconditional = unconditional_constant(sys, &fc.unconditional_signs, cfg);
    return fc;
}

TailCheckResult tail_unconditionality_check(const BiorthogonalSystem& sys, const Vector& x,
                                            int m0, double eps, const KernelConfig& cfg) {
    const int m = sys.frame_size();
    if (m0 < 0 || m0 > m)
        throw std::invalid_argument("tail_unconditionality_check: M0 out of range");
    if (eps <= 0.0) throw std::invalid_argument("tail_unconditionality_check: eps <= 0");
    const int tail = m - m0;
    double patterns = std::pow(3.0, tail);
    if (patterns > double(cfg.tail_cap))
        throw CapExceeded("tail_unconditionality_check: 3^(M-M0) exceeds cap");

    ColVec c = frame_expand(sys, x);
    TailCheckResult res;
    res.witness.assign(tail, 0);

    std::vector<int> lam(tail, -1);
    // odometer over {−1,0,+1}^tail
    bool done = tail == 0;
    while (!done) {
        ColVec v = ColVec::Zero(m);
        for (int j = 0; j < tail; ++j) v[m0 + j] = double(lam[j]) * c[m0 + j];
        double nrm = lp_norm(sys.A * v, sys.ambient.exponent);
        if (nrm > res.max_norm) {
            res.max_norm = nrm;
            res.witness.assign(lam.begin(), lam.end());
        }
        int k = 0;
        for (; k < tail; ++k) {
            if (lam[k] < 1) {
                ++lam[k];
                break;
            }
            lam[k] = -1;
        }
        done = k == tail;
    }
    res.ok = res.max_norm < eps;
    return res;
}

double besselian_dual_norm_estimate(const BiorthogonalSystem& sys, const Vector& f,
                                    int samples, std::uint64_t seed,
                                    const KernelConfig& cfg) {
    const int d = sys.ambient.dim;
    if (f.coords.size() != d)
        throw DimensionMismatch("besselian_dual_norm_estimate: dim mismatch");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto ratio = [&](const ColVec& x) {
        Vector vx(x, sys.ambient);
        double b = besselian_vector_norm(sys, vx, cfg);
        if (b == 0.0) return 0.0;
        return std::abs(f.coords.dot(x)) / b;
    };

    // Hölder witness sample makes the estimate >= ‖f‖_dual / L
    ColVec h = holder_witness(f.coords.cwiseAbs(), dual_exponent(sys.ambient.exponent));
    for (Eigen::Index i = 0; i < h.size(); ++i) h[i] *= f.coords[i] < 0.0 ? -1.0 : 1.0;
    double best = ratio(h);
    for (int s = 0; s < samples; ++s) {
        ColVec x(d);
        for (int i = 0; i < d; ++i) x[i] = gauss(rng);
        best = std::max(best, ratio(x));
    }
    return best;
}

}  // namespace besselnorm
