#include "besselnorm/opnorm.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace besselnorm {

namespace {

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

double inv_exp(const Exponent& e) { return e.is_infinite() ? 0.0 : 1.0 / e.value(); }

double sigma_max(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

/// f with ‖f‖_{p*} = 1 and f^T y = ‖y‖_p (signs folded in).
ColVec attaining_functional(const ColVec& y, const Exponent& p) {
    ColVec h = holder_witness(y.cwiseAbs(), p);
    for (Eigen::Index i = 0; i < y.size(); ++i) h[i] *= sign_of(y[i]);
    return h;
}

struct ExactHit {
    double value;
    ColVec g;
};

ExactHit column_rule(const Matrix& a, const Exponent& p) {
    // r = 1: extreme points of the domain ball are ±e_j
    double best = 0.0;
    Eigen::Index best_j = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        double v = lp_norm(a.col(j), p);
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    ColVec g = ColVec::Zero(a.cols());
    if (a.cols() > 0) g[best_j] = 1.0;
    return {best, g};
}

ExactHit row_rule(const Matrix& a, const Exponent& r) {
    // p = ∞: ‖A‖ = max_i ‖row_i‖_{r*}, attained by the Hölder witness of
    // the best row
    Exponent rd = dual_exponent(r);
    double best = 0.0;
    Eigen::Index best_i = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        double v = lp_norm(a.row(i).transpose(), rd);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    ColVec row = a.row(best_i).transpose();
    ColVec g = holder_witness(row.cwiseAbs(), r);
    for (Eigen::Index j = 0; j < g.size(); ++j) g[j] *= sign_of(row[j]);
    return {best, g};
}

ExactHit sign_enum(const Matrix& a, const Exponent& p) {
    // r = ∞: domain ball vertices {±1}^n; ties broken by first occurrence
    // in lexicographic order. −g gives the same norm, so the first
    // coordinate is pinned to +1.
    const Eigen::Index n = a.cols();
    double best = -1.0;
    std::uint64_t best_mask = 0;
    const std::uint64_t count = n > 1 ? (std::uint64_t(1) << (n - 1)) : 1;
    ColVec g(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        g[0] = 1.0;
        for (Eigen::Index j = 1; j < n; ++j) g[j] = (mask >> (j - 1)) & 1 ? -1.0 : 1.0;
        double v = lp_norm(a * g, p);
        if (v > best) {
            best = v;
            best_mask = mask;
        }
    }
    g[0] = 1.0;
    for (Eigen::Index j = 1; j < n; ++j) g[j] = (best_mask >> (j - 1)) & 1 ? -1.0 : 1.0;
    return {best, g};
}

/// Boyd-style alternating maximization of ‖Ax‖_p over ‖x‖_r ≤ 1.
/// Returns a feasible maximizer; a certified lower bound only.
struct PowerResult {
    double value = 0.0;
    ColVec x;
    int iterations = 0;
};

ColVec dual_step(const ColVec& w, const Exponent& r) {
    // argmax of w^T x over ‖x‖_r ≤ 1
    ColVec x = holder_witness(w.cwiseAbs(), dual_exponent(r));
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] *= sign_of(w[i]);
    return x;
}

PowerResult power_iteration(const Matrix& a, const Exponent& r, const Exponent& p,
                            const KernelConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index n = a.cols();

    PowerResult best;
    best.x = ColVec::Zero(n);
    auto run = [&](ColVec x) {
        double nx = lp_norm(x, r);
        if (nx == 0.0) return;
        x /= nx;
        double prev = -1.0;
        int it = 0;
        for (; it < cfg.power_max_iter; ++it) {
            ColVec y = a * x;
            double v = lp_norm(y, p);
            if (v <= prev * (1.0 + cfg.power_tol)) {
                prev = std::max(prev, v);
                break;
            }
            prev = v;
            ColVec f = attaining_functional(y, p);
            ColVec w = a.transpose() * f;
            ColVec xn = dual_step(w, r);
            if (lp_norm(xn, r) == 0.0) break;
            x = xn;
        }
        best.iterations += it;
        double v = lp_norm(a * x, p);
        if (v > best.value) {
            best.value = v;
            best.x = x;
        }
    };

    for (Eigen::Index j = 0; j < n; ++j) {
        ColVec e = ColVec::Zero(n);
        e[j] = 1.0;
        run(e);
    }
    run(ColVec::Ones(n));
    for (int s = 0; s < cfg.power_starts; ++s) {
        ColVec x(n);
        for (Eigen::Index i = 0; i < n; ++i) x[i] = gauss(rng);
        run(x);
    }
    return best;
}

double interpolation_upper(const Matrix& a, const Exponent& r, const Exponent& p,
                           const KernelConfig& cfg) {
    // Upper bounds valid for the complex extension, hence for the real
    // norm: Riesz-Thorin between exactly computable endpoints.
    double bound = std::numeric_limits<double>::infinity();
    const double ir = inv_exp(r);
    const double ip = inv_exp(p);

    // endpoints (1,p) and (∞,p): ‖A‖ ≤ ‖A‖_{1→p}^{1/r} ‖A‖_{∞→p}^{1−1/r}
    double n1 = column_rule(a, p).value;
    bool inf_ok = a.cols() < 63 &&
                  (std::uint64_t(1) << std::max<Eigen::Index>(a.cols() - 1, 0)) <= cfg.sign_cap;
    if (inf_ok) {
        double ninf = sign_enum(a, p).value;
        bound = std::min(bound, std::pow(n1, ir) * std::pow(ninf, 1.0 - ir));
    } else {
        // Σ_j ‖col_j‖_p dominates ‖A‖_{∞→p}
        double colsum = 0.0;
        for (Eigen::Index j = 0; j < a.cols(); ++j) colsum += lp_norm(a.col(j), p);
        bound = std::min(bound, std::pow(n1, ir) * std::pow(colsum, 1.0 - ir));
    }

    // diagonal case r == p: endpoints (1,1) and (∞,∞) are row/col abs sums
    if (r == p) {
        double c11 = 0.0;
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            c11 = std::max(c11, a.col(j).cwiseAbs().sum());
        double cinf = 0.0;
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            cinf = std::max(cinf, a.row(i).cwiseAbs().sum());
        bound = std::min(bound, std::pow(c11, ip) * std::pow(cinf, 1.0 - ip));
    }

    // spectral bound with dimension factors for the norm shifts
    double s = sigma_max(a);
    double fac = std::pow(double(a.cols()), std::max(0.0, 0.5 - ir)) *
                 std::pow(double(a.rows()), std::max(0.0, ip - 0.5));
    bound = std::min(bound, s * fac);
    return bound;
}

}  // namespace

ColVec holder_witness(const ColVec& c, const Exponent& p) {
    for (Eigen::Index i = 0; i < c.size(); ++i)
        if (c[i] < 0.0) throw std::invalid_argument("holder_witness: c must be >= 0");
    const Eigen::Index n = c.size();
    Exponent pd = dual_exponent(p);
    if (p.is_infinite()) {
        Eigen::Index best = 0;
        c.maxCoeff(&best);
        ColVec f = ColVec::Zero(n);
        if (n > 0) f[best] = 1.0;
        return f;
    }
    if (p.is_one()) return ColVec::Ones(n);
    double np = lp_norm(c, p);
    if (np == 0.0) {
        // any dual-unit f works; pairing is 0
        ColVec f = ColVec::Zero(n);
        if (n > 0) f[0] = 1.0;
        return f;
    }
    double q = p.value();
    ColVec f(n);
    for (Eigen::Index i = 0; i < n; ++i) f[i] = std::pow(c[i] / np, q - 1.0);
    // exact up to rounding: renormalize in the dual norm
    double nf = lp_norm(f, pd);
    if (nf > 0.0) f /= nf;
    return f;
}

NormResult operator_norm(const OperatorNormQuery& q) {
    const Matrix& a = q.matrix;
    const Exponent& r = q.from;
    const Exponent& p = q.to;

    if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) {
        NormResult res = NormResult::exact(0.0, "zero");
        res.witness_f = ColVec::Zero(a.rows());
        res.witness_g = ColVec::Zero(a.cols());
        return res;
    }

    auto finish_exact = [&](ExactHit hit, const char* method) {
        NormResult res = NormResult::exact(hit.value, method);
        res.witness_g = hit.g;
        res.witness_f = attaining_functional(a * hit.g, p);
        return res;
    };

    if (r.is_one()) return finish_exact(column_rule(a, p), "column_rule");
    if (p.is_infinite()) return finish_exact(row_rule(a, r), "row_rule");
    if (!r.is_infinite() && r.value() == 2.0 && !p.is_infinite() && p.value() == 2.0) {
        Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        NormResult res = NormResult::exact(svd.singularValues()(0), "svd");
        res.witness_g = svd.matrixV().col(0);
        res.witness_f = svd.matrixU().col(0);
        return res;
    }
    if (r.is_infinite()) {
        const Eigen::Index n = a.cols();
        bool within = n < 63 && (std::uint64_t(1) << std::max<Eigen::Index>(n - 1, 0)) <=
                                    q.config.sign_cap;
        if (within) return finish_exact(sign_enum(a, p), "sign_vertex_enum");
        // cap exceeded: fall through to a flagged bracket
    }

    PowerResult pw = power_iteration(a, r, p, q.config);
    double upper = interpolation_upper(a, r, p, q.config);
    upper = std::max(upper, pw.value);
    NormResult res = NormResult::bracket(pw.value, upper,
                                         r.is_infinite() ? "bracket_cap_exceeded"
                                                         : "bracket_power_iteration");
    res.iterations = pw.iterations;
    res.witness_g = pw.x;
    res.witness_f = attaining_functional(a * pw.x, p);
    return res;
}

}  // namespace besselnorm
