#include "besselnorm/verify.hpp"

#include "besselnorm/lattice.hpp"

#include <Eigen/LU>

#include <cmath>
#include <random>
#include <sstream>

namespace besselnorm {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double gauss() {
        std::normal_distribution<double> d(0.0, 1.0);
        return d(eng);
    }
    double unif() {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        return d(eng);
    }
    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }
};

Matrix random_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.gauss();
    return m;
}

ColVec random_vec(Rng& rng, int n) {
    ColVec v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.gauss();
    return v;
}

/// Random well-conditioned biorthogonal system on l2: A = I + small
/// perturbation, B = A^{-T}.
BiorthogonalSystem random_l2_system(Rng& rng, int dim) {
    Matrix a = Matrix::Identity(dim, dim) + 0.3 / std::sqrt(double(dim)) *
                                                random_matrix(rng, dim, dim);
    Matrix b = a.inverse().transpose();
    return BiorthogonalSystem(SpaceDescriptor::lp(2.0, dim), a, b, 1e-8);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

struct Checker {
    std::vector<PropertyResult> results;

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        PropertyResult r{name, true, ""};
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (r.passed && r.detail.empty()) r.detail = "ok";
        results.push_back(std::move(r));
    }
};

void fail(PropertyResult& r, const std::string& detail) {
    if (r.passed) r.detail = detail;
    r.passed = false;
}

struct SpacePair {
    SpaceDescriptor left;
    SpaceDescriptor right;
};

std::vector<SpacePair> exact_pairs(int dl, int dr) {
    return {
        {SpaceDescriptor::lp(2.0, dl), SpaceDescriptor::lp(2.0, dr)},
        {SpaceDescriptor::lp(1.0, dl), SpaceDescriptor::lp(1.0, dr)},
        {SpaceDescriptor::c0(dl), SpaceDescriptor::c0(dr)},
        {SpaceDescriptor::lp(3.0, dl), SpaceDescriptor::lp(1.0, dr)},
    };
}

CoeffTensor random_tensor(Rng& rng, const SpacePair& sp) {
    return CoeffTensor(random_matrix(rng, sp.left.dim, sp.right.dim), sp.left, sp.right);
}

ColVec dual_unit(Rng& rng, const SpaceDescriptor& s) {
    ColVec f = random_vec(rng, s.dim);
    double n = lp_norm(f, dual_exponent(s.exponent));
    return n > 0 ? ColVec(f / n) : f;
}

}  // namespace

// ---------------------------------------------------------------------------
// independent oracles

double oracle_operator_norm(const Matrix& a, const Exponent& from, const Exponent& to,
                            std::uint64_t seed) {
    const Eigen::Index n = a.cols();
    auto value = [&](const ColVec& x) {
        double nx = lp_norm(x, from);
        return nx > 0 ? lp_norm(a * x, to) / nx : 0.0;
    };

    if (from.is_one()) {
        double best = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            ColVec e = ColVec::Zero(n);
            e[j] = 1.0;
            best = std::max(best, value(e));
            best = std::max(best, value(-e));
        }
        return best;
    }
    if (from.is_infinite()) {
        double best = 0.0;
        ColVec g(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            for (Eigen::Index j = 0; j < n; ++j) g[j] = (mask >> j) & 1 ? -1.0 : 1.0;
            best = std::max(best, value(g));
        }
        return best;
    }

    // smooth domain ball: projected gradient ascent with backtracking
    auto subgrad = [&](const ColVec& x) {
        ColVec y = a * x;
        ColVec f(y.size());
        if (to.is_infinite()) {
            Eigen::Index imax = 0;
            y.cwiseAbs().maxCoeff(&imax);
            f.setZero();
            f[imax] = y[imax] < 0 ? -1.0 : 1.0;
        } else if (to.is_one()) {
            for (Eigen::Index i = 0; i < y.size(); ++i) f[i] = y[i] < 0 ? -1.0 : 1.0;
        } else {
            double ny = lp_norm(y, to);
            if (ny == 0.0) return ColVec(ColVec::Zero(x.size()));
            double q = to.value();
            for (Eigen::Index i = 0; i < y.size(); ++i)
                f[i] = (y[i] < 0 ? -1.0 : 1.0) * std::pow(std::abs(y[i]) / ny, q - 1.0);
        }
        return ColVec(a.transpose() * f);
    };

    auto ascend = [&](ColVec x) {
        double nx = lp_norm(x, from);
        if (nx == 0.0) return 0.0;
        x /= nx;
        double v = value(x);
        double eta = 1.0;
        for (int it = 0; it < 500 && eta > 1e-13; ++it) {
            ColVec g = subgrad(x);
            ColVec cand = x + eta * g;
            double nc = lp_norm(cand, from);
            if (nc == 0.0) {
                eta *= 0.5;
                continue;
            }
            cand /= nc;
            double vc = value(cand);
            if (vc > v + 1e-16) {
                x = cand;
                v = vc;
                eta *= 1.5;
            } else {
                eta *= 0.5;
            }
        }
        return v;
    };

    double best = 0.0;
    // row-witness starts guarantee the p = infinity row maxima are reachable
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        ColVec row = a.row(i).transpose();
        ColVec h = holder_witness(row.cwiseAbs(), dual_exponent(from));
        for (Eigen::Index j = 0; j < n; ++j) h[j] *= row[j] < 0 ? -1.0 : 1.0;
        best = std::max(best, ascend(h));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        ColVec e = ColVec::Zero(n);
        e[j] = 1.0;
        best = std::max(best, ascend(e));
    }
    best = std::max(best, ascend(ColVec::Ones(n)));
    Rng rng(seed);
    for (int s = 0; s < 64; ++s) best = std::max(best, ascend(random_vec(rng, int(n))));
    return best;
}

double oracle_tail_max(const BiorthogonalSystem& sys, const Vector& x, int m0) {
    ColVec c = frame_expand(sys, x);
    const int m = sys.frame_size();
    double best = 0.0;
    // recursive subset + sign choice over the tail indices
    std::function<void(int, ColVec&)> rec = [&](int idx, ColVec& acc) {
        if (idx == m) {
            best = std::max(best, lp_norm(sys.A * acc, sys.ambient.exponent));
            return;
        }
        rec(idx + 1, acc);  // idx not in the subset
        acc[idx] = c[idx];
        rec(idx + 1, acc);
        acc[idx] = -c[idx];
        rec(idx + 1, acc);
        acc[idx] = 0.0;
    };
    ColVec acc = ColVec::Zero(m);
    rec(m0, acc);
    return best;
}

// ---------------------------------------------------------------------------
// axioms suite

std::vector<PropertyResult> verify_axioms(const VerifyConfig& cfg,
                                          const VerifyHooks& hooks) {
    Checker ck;
    const KernelConfig& kc = cfg.kernel;

    ck.run("sandwich_eps_le_alpha_le_pi", [&](PropertyResult& r) {
        Rng rng(cfg.seed);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 6), rng.uniform_int(2, 6));
            const SpacePair& sp = pairs[t % pairs.size()];
            CoeffTensor u = random_tensor(rng, sp);
            double eps = injective_norm(u, kc).value;
            NormResult alpha = hooks.alpha(u, kc);
            if (eps - 1e-8 > alpha.value)
                fail(r, "eps=" + fmt(eps) + " > alpha=" + fmt(alpha.value) + " on " +
                            sp.left.name() + "x" + sp.right.name());
            NormResult pi = projective_norm(u, kc);
            if (pi.is_exact() && alpha.value > pi.value + 1e-8)
                fail(r, "alpha=" + fmt(alpha.value) + " > pi=" + fmt(pi.value) + " on " +
                            sp.left.name() + "x" + sp.right.name());
        }
    });

    ck.run("cross_property_elementary_tensors", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 1);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 5), rng.uniform_int(2, 5));
            const SpacePair& sp = pairs[t % pairs.size()];
            Vector x(random_vec(rng, sp.left.dim), sp.left);
            Vector y(random_vec(rng, sp.right.dim), sp.right);
            CoeffTensor u(x.coords * y.coords.transpose(), sp.left, sp.right);
            double lhs = hooks.alpha(u, kc).value;
            double rhs = besselian_vector_norm(canonical_system(sp.left), x, kc) *
                         besselian_vector_norm(canonical_system(sp.right), y, kc);
            if (std::abs(lhs - rhs) > 1e-8 * (1.0 + rhs))
                fail(r, "alpha(x⊗y)=" + fmt(lhs) + " vs ‖x‖Bess‖y‖Bess=" + fmt(rhs));
        }
    });

    ck.run("dual_condition_functional_pairing", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 2);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 6), rng.uniform_int(2, 6));
            const SpacePair& sp = pairs[t % pairs.size()];
            CoeffTensor u = random_tensor(rng, sp);
            ColVec f = dual_unit(rng, sp.left);
            ColVec g = dual_unit(rng, sp.right);
            double pairing = std::abs(pair_with_functionals(u, f, g));
            double alpha = hooks.alpha(u, kc).value;
            if (pairing > alpha + 1e-8)
                fail(r, "|f⊗g(u)|=" + fmt(pairing) + " > alpha=" + fmt(alpha));
        }
    });

    ck.run("alpha_norm_axioms", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 3);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 5), rng.uniform_int(2, 5));
            const SpacePair& sp = pairs[t % pairs.size()];
            CoeffTensor u = random_tensor(rng, sp);
            CoeffTensor v = random_tensor(rng, sp);
            double c = 3.0 * rng.gauss();
            double au = hooks.alpha(u, kc).value;
            double av = hooks.alpha(v, kc).value;
            double acu = hooks.alpha(CoeffTensor(c * u.lam, sp.left, sp.right), kc).value;
            if (std::abs(acu - std::abs(c) * au) > 1e-8 * (1.0 + acu))
                fail(r, "homogeneity: alpha(cu)=" + fmt(acu) + " vs |c|alpha(u)=" +
                            fmt(std::abs(c) * au));
            double asum =
                hooks.alpha(CoeffTensor(u.lam + v.lam, sp.left, sp.right), kc).value;
            if (asum > au + av + 1e-8)
                fail(r, "triangle: alpha(u+v)=" + fmt(asum) + " > " + fmt(au + av));
            if (au < 1e-12 && u.lam.cwiseAbs().maxCoeff() > 1e-9)
                fail(r, "definiteness: alpha=0 on a nonzero tensor");
        }
    });

    ck.run("sign_invariance", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 4);
        SpaceDescriptor l2a = SpaceDescriptor::lp(2.0, 4);
        CoeffTensor base(random_matrix(rng, 4, 4), l2a, l2a);
        double a0 = hooks.alpha(base, kc).value;
        // exhaustive over all 2^16 sign matrices for the 4x4 shape
        for (std::uint32_t mask = 0; mask < (1u << 16) && r.passed; ++mask) {
            Matrix eps(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    eps(i, j) = (mask >> (4 * i + j)) & 1 ? -1.0 : 1.0;
            double af = hooks.alpha(sign_flip(base, eps), kc).value;
            if (std::abs(af - a0) > 1e-9 * (1.0 + a0))
                fail(r, "sign flip changed alpha: " + fmt(af) + " vs " + fmt(a0));
        }
        // sampled for a larger shape, plus the |u| identity
        SpaceDescriptor l2b = SpaceDescriptor::lp(2.0, 5);
        CoeffTensor big(random_matrix(rng, 5, 5), l2b, l2b);
        double b0 = hooks.alpha(big, kc).value;
        double babs = hooks.alpha(lattice_abs(big), kc).value;
        if (std::abs(babs - b0) > 1e-9 * (1.0 + b0))
            fail(r, "alpha(|u|) != alpha(u): " + fmt(babs) + " vs " + fmt(b0));
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            Matrix eps(5, 5);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) eps(i, j) = rng.unif() < 0.5 ? -1.0 : 1.0;
            double bf = hooks.alpha(sign_flip(big, eps), kc).value;
            if (std::abs(bf - b0) > 1e-9 * (1.0 + b0))
                fail(r, "sampled sign flip changed alpha: " + fmt(bf) + " vs " + fmt(b0));
        }
    });

    ck.run("alpha_entrywise_monotonicity", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 5);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 6), rng.uniform_int(2, 6));
            const SpacePair& sp = pairs[t % pairs.size()];
            CoeffTensor big = random_tensor(rng, sp);
            Matrix shrink = big.lam;
            for (Eigen::Index i = 0; i < shrink.rows(); ++i)
                for (Eigen::Index j = 0; j < shrink.cols(); ++j) shrink(i, j) *= rng.unif();
            CoeffTensor small(shrink, sp.left, sp.right);
            double as = hooks.alpha(small, kc).value;
            double ab = hooks.alpha(big, kc).value;
            if (as > ab + 1e-9 * (1.0 + ab))
                fail(r, "monotonicity: alpha(shrunk)=" + fmt(as) + " > " + fmt(ab));
        }
    });

    ck.run("c0_c0_coincidence_max_entry", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 6);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            int k = rng.uniform_int(1, 8), kp = rng.uniform_int(1, 8);
            SpacePair sp{SpaceDescriptor::c0(k), SpaceDescriptor::c0(kp)};
            CoeffTensor u = random_tensor(rng, sp);
            double mx = u.lam.cwiseAbs().maxCoeff();
            double a = hooks.alpha(u, kc).value;
            double e = injective_norm(u, kc).value;
            if (std::abs(a - mx) > 1e-10 * (1.0 + mx) || std::abs(e - mx) > 1e-10 * (1.0 + mx))
                fail(r, "alpha=" + fmt(a) + " eps=" + fmt(e) + " max=" + fmt(mx));
        }
    });

    ck.run("l1_l1_coincidence_abs_sum", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 7);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            int k = rng.uniform_int(1, 8), kp = rng.uniform_int(1, 8);
            SpacePair sp{SpaceDescriptor::lp(1.0, k), SpaceDescriptor::lp(1.0, kp)};
            CoeffTensor u = random_tensor(rng, sp);
            double sum = u.lam.cwiseAbs().sum();
            double a = hooks.alpha(u, kc).value;
            double p = projective_norm(u, kc).value;
            if (std::abs(a - sum) > 1e-10 * (1.0 + sum) ||
                std::abs(p - sum) > 1e-10 * (1.0 + sum))
                fail(r, "alpha=" + fmt(a) + " pi=" + fmt(p) + " sum=" + fmt(sum));
        }
    });

    ck.run("zero_padding_invariance", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 8);
        for (int t = 0; t < std::min(cfg.samples, 200) && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 4), rng.uniform_int(2, 4));
            const SpacePair& sp = pairs[t % pairs.size()];
            CoeffTensor u = random_tensor(rng, sp);
            SpacePair big{SpaceDescriptor{sp.left.kind, sp.left.exponent, sp.left.dim + 3},
                          SpaceDescriptor{sp.right.kind, sp.right.exponent,
                                          sp.right.dim + 2}};
            Matrix padded = Matrix::Zero(big.left.dim, big.right.dim);
            padded.topLeftCorner(u.lam.rows(), u.lam.cols()) = u.lam;
            CoeffTensor up(padded, big.left, big.right);
            double a = hooks.alpha(u, kc).value, ap = hooks.alpha(up, kc).value;
            double e = injective_norm(u, kc).value, ep = injective_norm(up, kc).value;
            if (std::abs(a - ap) > 1e-10 * (1.0 + a) || std::abs(e - ep) > 1e-10 * (1.0 + e))
                fail(r, "padding moved a norm: alpha " + fmt(a) + "->" + fmt(ap) +
                            ", eps " + fmt(e) + "->" + fmt(ep));
            if (std::abs(hs_norm(u) - hs_norm(up)) > 1e-12)
                fail(r, "padding moved the HS norm");
        }
    });

    ck.run("kernel_matches_bruteforce_oracle", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 9);
        std::vector<Exponent> exps = {Exponent::finite(1.0), Exponent::finite(2.0),
                                      Exponent::infinity()};
        for (int t = 0; t < std::min(cfg.samples, 200) && r.passed; ++t) {
            Matrix a = random_matrix(rng, rng.uniform_int(1, 6), rng.uniform_int(1, 6));
            const Exponent& from = exps[t % 3];
            const Exponent& to = exps[(t / 3) % 3];
            NormResult got = operator_norm({a, from, to, kc});
            double want = oracle_operator_norm(a, from, to, cfg.seed + t);
            if (got.is_exact()) {
                if (std::abs(got.value - want) > 1e-6 * (1.0 + want))
                    fail(r, "exact path " + from.str() + "->" + to.str() + ": got " +
                                fmt(got.value) + ", oracle " + fmt(want));
            } else if (want > got.upper + 1e-6) {
                // the oracle is a lower-bound search too, so only the upper
                // end of a bracket can be contradicted by it
                fail(r, "bracket " + from.str() + "->" + to.str() + " upper " +
                            fmt(got.upper) + " below oracle " + fmt(want));
            }
        }
    });

    return ck.results;
}

// ---------------------------------------------------------------------------
// published worked examples

std::vector<PropertyResult> verify_paper(const VerifyConfig& cfg) {
    Checker ck;
    const KernelConfig& kc = cfg.kernel;
    const SpaceDescriptor l2 = SpaceDescriptor::lp(2.0, 2);
    const double rt2 = std::sqrt(2.0);

    Matrix id2 = Matrix::Identity(2, 2);
    Matrix rot(2, 2);
    rot << 1, 1, -1, 1;  // coefficients of e1⊗e1 + e1⊗e2 + e2⊗e2 − e2⊗e1
    Matrix skew(2, 2);
    skew << 3, -1, 0, 2;

    auto close = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };

    ck.run("l2_l2_alpha_of_diagonal_is_1", [&](PropertyResult& r) {
        double a = besselian_crossnorm(CoeffTensor(id2, l2, l2), kc).value;
        if (!close(a, 1.0, 1e-9)) fail(r, "alpha(u)=" + fmt(a));
    });
    ck.run("l2_l2_pi_of_diagonal_is_2", [&](PropertyResult& r) {
        double p = projective_norm(CoeffTensor(id2, l2, l2), kc).value;
        if (!close(p, 2.0, 1e-9)) fail(r, "pi(u)=" + fmt(p));
    });
    ck.run("l2_l2_eps_of_rotation_is_sqrt2", [&](PropertyResult& r) {
        double e = injective_norm(CoeffTensor(rot, l2, l2), kc).value;
        if (!close(e, rt2, 1e-9)) fail(r, "eps(v)=" + fmt(e));
    });
    ck.run("l2_l2_alpha_of_rotation_is_2", [&](PropertyResult& r) {
        double a = besselian_crossnorm(CoeffTensor(rot, l2, l2), kc).value;
        if (!close(a, 2.0, 1e-9)) fail(r, "alpha(v)=" + fmt(a));
    });
    ck.run("c0_c0_alpha_is_max_entry", [&](PropertyResult& r) {
        CoeffTensor u(skew, SpaceDescriptor::c0(2), SpaceDescriptor::c0(2));
        double a = besselian_crossnorm(u, kc).value;
        double e = injective_norm(u, kc).value;
        if (!close(a, 3.0, 1e-10) || !close(e, 3.0, 1e-10))
            fail(r, "alpha=" + fmt(a) + " eps=" + fmt(e));
    });
    ck.run("l1_l1_alpha_is_abs_sum", [&](PropertyResult& r) {
        CoeffTensor u(skew, SpaceDescriptor::lp(1.0, 2), SpaceDescriptor::lp(1.0, 2));
        double a = besselnorm::besselian_crossnorm(u, kc).value;
        double p = projective_norm(u, kc).value;
        if (!close(a, 6.0, 1e-10) || !close(p, 6.0, 1e-10))
            fail(r, "alpha=" + fmt(a) + " pi=" + fmt(p));
    });
    ck.run("hs_norm_examples", [&](PropertyResult& r) {
        if (!close(hs_norm(CoeffTensor(id2, l2, l2)), rt2, 1e-12))
            fail(r, "hs(I2) wrong");
        if (!close(hs_norm(CoeffTensor(rot, l2, l2)), 2.0, 1e-12))
            fail(r, "hs(rotation) wrong");
    });
    ck.run("operator_norm_examples", [&](PropertyResult& r) {
        Exponent two = Exponent::finite(2.0);
        double n1 = operator_norm({rot, two, two, kc}).value;
        Matrix ones = Matrix::Ones(2, 2);
        double n2 = operator_norm({ones, two, two, kc}).value;
        if (!close(n1, rt2, 1e-10) || !close(n2, 2.0, 1e-10))
            fail(r, "rotation " + fmt(n1) + ", ones " + fmt(n2));
    });
    ck.run("besselian_constant_canonical_is_1", [&](PropertyResult& r) {
        std::vector<SpaceDescriptor> spaces;
        for (int d = 2; d <= 8 && r.passed; ++d) {
            spaces = {SpaceDescriptor::lp(1.0, d), SpaceDescriptor::lp(2.0, d),
                      SpaceDescriptor::lp(4.0, d), SpaceDescriptor::c0(d)};
            for (const auto& s : spaces) {
                NormResult l = besselian_constant(canonical_system(s), nullptr, kc);
                if (std::abs(l.value - 1.0) > 1e-10 || std::abs(l.upper - 1.0) > 1e-10) {
                    fail(r, s.name() + ": L=[" + fmt(l.lower) + "," + fmt(l.upper) + "]");
                    break;
                }
            }
        }
    });
    ck.run("besselian_vector_norm_examples", [&](PropertyResult& r) {
        ColVec a(2);
        a << 3, 4;
        double n1 = besselian_vector_norm(canonical_system(l2),
                                          Vector(a, l2), kc);
        ColVec b(3);
        b << 1, -1, 2;
        SpaceDescriptor l13 = SpaceDescriptor::lp(1.0, 3);
        double n2 = besselian_vector_norm(canonical_system(l13), Vector(b, l13), kc);
        if (!close(n1, 5.0, 1e-10) || !close(n2, 4.0, 1e-10))
            fail(r, "got " + fmt(n1) + " and " + fmt(n2));
    });
    ck.run("nonuniformity_demo_values", [&](PropertyResult& r) {
        UniformityDemo d = uniformity_violation_demo(kc);
        if (!close(d.alpha_u, 1.0, 1e-9) || !close(d.alpha_v, 2.0, 1e-9) ||
            !close(d.operator_bound, rt2, 1e-9) || !d.violated)
            fail(r, "alpha_u=" + fmt(d.alpha_u) + " alpha_v=" + fmt(d.alpha_v) +
                        " bound=" + fmt(d.operator_bound));
    });
    ck.run("mixed_norm_identifications", [&](PropertyResult& r) {
        Matrix ones = Matrix::Ones(2, 2);
        CoeffTensor u(ones, SpaceDescriptor::lp(2.0, 2), SpaceDescriptor::lp(1.0, 2));
        if (!close(iso_lp_l1(u), 2.0 * rt2, 1e-12)) fail(r, "lp(l1) value wrong");
        if (!close(besselian_crossnorm(u, kc).value, 2.0 * rt2, 1e-8))
            fail(r, "alpha disagrees with lp(l1)");
        Matrix row(2, 2);
        row << 1, -1, 0, 0;
        CoeffTensor w(row, SpaceDescriptor::c0(2), SpaceDescriptor::lp(2.0, 2));
        if (!close(iso_c0_F(w), rt2, 1e-12)) fail(r, "c0(F) value wrong");
        if (!close(besselian_crossnorm(w, kc).value, rt2, 1e-8))
            fail(r, "alpha disagrees with c0(F)");
    });
    ck.run("rep_infimum_matches_closed_form", [&](PropertyResult& r) {
        // diagonal tensor as an explicit rank rep
        std::vector<std::pair<Vector, Vector>> pairs;
        ColVec e1 = ColVec::Zero(2), e2 = ColVec::Zero(2);
        e1[0] = 1;
        e2[1] = 1;
        pairs.emplace_back(Vector(e1, l2), Vector(e1, l2));
        pairs.emplace_back(Vector(e2, l2), Vector(e2, l2));
        RankRep rep(pairs, l2, l2);
        auto sys = canonical_system(l2);
        NormResult res = besselian_crossnorm_upper(rep, sys, sys, 32, kc);
        if (!close(res.lower, 1.0, 1e-9) || res.upper - res.lower > 1e-6 * (1.0 + res.lower))
            fail(r, "bracket [" + fmt(res.lower) + "," + fmt(res.upper) + "]");
        // repeated pair: rank rep of 2 e1⊗e1 has Bess value 2
        std::vector<std::pair<Vector, Vector>> twice;
        twice.emplace_back(Vector(e1, l2), Vector(e1, l2));
        twice.emplace_back(Vector(e1, l2), Vector(e1, l2));
        double b = bess_functional_of_rank_rep(RankRep(twice, l2, l2), sys, sys, kc).value;
        if (!close(b, 2.0, 1e-9)) fail(r, "Bess(2 e1⊗e1)=" + fmt(b));
    });

    return ck.results;
}

// ---------------------------------------------------------------------------
// frames suite

std::vector<PropertyResult> verify_frames(const VerifyConfig& cfg) {
    Checker ck;
    const KernelConfig& kc = cfg.kernel;

    ck.run("canonical_besselian_norm_equals_norm", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 20);
        std::vector<SpaceDescriptor> spaces = {
            SpaceDescriptor::lp(1.0, 5), SpaceDescriptor::lp(2.0, 5),
            SpaceDescriptor::lp(4.0, 5), SpaceDescriptor::c0(5),
            SpaceDescriptor::lp_inf(5)};
        for (const auto& s : spaces) {
            auto sys = canonical_system(s);
            for (int t = 0; t < cfg.samples && r.passed; ++t) {
                Vector x(random_vec(rng, s.dim), s);
                double lhs = besselian_vector_norm(sys, x, kc);
                double rhs = vector_norm(x);
                if (std::abs(lhs - rhs) > 1e-10 * (1.0 + rhs))
                    fail(r, s.name() + ": " + fmt(lhs) + " vs " + fmt(rhs));
            }
        }
    });

    ck.run("besselian_inequality_sandwich", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 21);
        for (int t = 0; t < std::min(cfg.samples, 100) && r.passed; ++t) {
            int d = rng.uniform_int(2, 5);
            BiorthogonalSystem sys = random_l2_system(rng, d);
            NormResult lc = besselian_constant(sys, nullptr, kc);
            for (int k = 0; k < 10 && r.passed; ++k) {
                Vector x(random_vec(rng, d), sys.ambient);
                double nb = besselian_vector_norm(sys, x, kc);
                double n = vector_norm(x);
                if (n - 1e-9 > nb || nb > lc.upper * n + 1e-8)
                    fail(r, "‖x‖=" + fmt(n) + " ‖x‖Bess=" + fmt(nb) + " L=" +
                                fmt(lc.upper));
            }
        }
    });

    ck.run("dual_norm_sandwich", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 22);
        for (int t = 0; t < std::min(cfg.samples, 50) && r.passed; ++t) {
            int d = rng.uniform_int(2, 6);
            BiorthogonalSystem sys = random_l2_system(rng, d);
            double lc = besselian_constant(sys, nullptr, kc).value;
            Vector f(random_vec(rng, d), sys.ambient);
            double fd = lp_norm(f.coords, dual_exponent(sys.ambient.exponent));
            double est = besselian_dual_norm_estimate(sys, f, 100, cfg.seed + t, kc);
            if (est > fd + 1e-8 || est < fd / lc - 1e-8)
                fail(r, "estimate " + fmt(est) + " outside [" + fmt(fd / lc) + "," +
                            fmt(fd) + "]");
        }
    });

    ck.run("unconditional_dominates_besselian", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 23);
        for (int t = 0; t < std::min(cfg.samples, 100) && r.passed; ++t) {
            int d = rng.uniform_int(2, 10);
            BiorthogonalSystem sys = random_l2_system(rng, d);
            double lc = besselian_constant(sys, nullptr, kc).value;
            double dc = unconditional_constant(sys, nullptr, kc).value;
            if (lc > dc + 1e-8)
                fail(r, "L=" + fmt(lc) + " > D=" + fmt(dc));
            if (dc < 1.0 - 1e-10 || lc < 1.0 - 1e-10)
                fail(r, "constant below 1: L=" + fmt(lc) + " D=" + fmt(dc));
        }
    });

    ck.run("besselian_norm_axioms", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 24);
        for (int t = 0; t < std::min(cfg.samples, 200) && r.passed; ++t) {
            int d = rng.uniform_int(2, 5);
            BiorthogonalSystem sys = random_l2_system(rng, d);
            ColVec a = random_vec(rng, d), b = random_vec(rng, d);
            double na = besselian_vector_norm(sys, Vector(a, sys.ambient), kc);
            double nb = besselian_vector_norm(sys, Vector(b, sys.ambient), kc);
            double nsum = besselian_vector_norm(sys, Vector(a + b, sys.ambient), kc);
            double c = 2.0 * rng.gauss();
            double nca = besselian_vector_norm(sys, Vector(c * a, sys.ambient), kc);
            if (nsum > na + nb + 1e-8)
                fail(r, "triangle: " + fmt(nsum) + " > " + fmt(na + nb));
            if (std::abs(nca - std::abs(c) * na) > 1e-8 * (1.0 + nca))
                fail(r, "homogeneity: " + fmt(nca) + " vs " + fmt(std::abs(c) * na));
        }
    });

    ck.run("frame_expand_reconstructs", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 25);
        for (int t = 0; t < std::min(cfg.samples, 200) && r.passed; ++t) {
            int d = rng.uniform_int(1, 6);
            BiorthogonalSystem sys = random_l2_system(rng, d);
            Vector x(random_vec(rng, d), sys.ambient);
            ColVec rec = sys.A * frame_expand(sys, x);
            if ((rec - x.coords).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + vector_norm(x)))
                fail(r, "reconstruction error at dim " + std::to_string(d));
        }
    });

    ck.run("tail_check_matches_enumeration_oracle", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 26);
        for (int t = 0; t < std::min(cfg.samples, 100) && r.passed; ++t) {
            int d = rng.uniform_int(2, 6);
            BiorthogonalSystem sys = random_l2_system(rng, d);
            Vector x(random_vec(rng, d), sys.ambient);
            int m0 = rng.uniform_int(0, d - 1);
            double eps = 0.1 + 2.0 * rng.unif();
            TailCheckResult got = tail_unconditionality_check(sys, x, m0, eps, kc);
            double want = oracle_tail_max(sys, x, m0);
            if (std::abs(got.max_norm - want) > 1e-12 * (1.0 + want) ||
                got.ok != (want < eps))
                fail(r, "max " + fmt(got.max_norm) + " vs oracle " + fmt(want));
        }
    });

    return ck.results;
}

// ---------------------------------------------------------------------------
// lattice suite

std::vector<PropertyResult> verify_lattice(const VerifyConfig& cfg) {
    Checker ck;
    const KernelConfig& kc = cfg.kernel;

    ck.run("partial_order_axioms", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 40);
        SpaceDescriptor l2 = SpaceDescriptor::lp(2.0, 4);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            CoeffTensor u(random_matrix(rng, 4, 4), l2, l2);
            CoeffTensor v(u.lam + random_matrix(rng, 4, 4).cwiseAbs(), l2, l2);
            CoeffTensor w(random_matrix(rng, 4, 4), l2, l2);
            if (!lattice_leq(u, v)) fail(r, "u+|noise| not >= u");
            CoeffTensor uw(u.lam + w.lam, l2, l2), vw(v.lam + w.lam, l2, l2);
            if (!lattice_leq(uw, vw)) fail(r, "translation invariance failed");
            double c = 2.0 * rng.unif();
            if (!lattice_leq(CoeffTensor(c * u.lam, l2, l2),
                             CoeffTensor(c * v.lam, l2, l2)))
                fail(r, "positive homogeneity failed");
            CoeffTensor j = lattice_join(u, w), m = lattice_meet(u, w);
            if (!lattice_leq(u, j) || !lattice_leq(w, j) || !lattice_leq(m, u) ||
                !lattice_leq(m, w))
                fail(r, "join/meet bound failure");
            // least upper bound: any common upper bound dominates the join
            CoeffTensor ub(j.lam + random_matrix(rng, 4, 4).cwiseAbs(), l2, l2);
            if (!lattice_leq(j, ub)) fail(r, "join not least");
        }
    });

    ck.run("norm_compatibility_monotone", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 41);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 5), rng.uniform_int(2, 5));
            const SpacePair& sp = pairs[t % pairs.size()];
            CoeffTensor v = random_tensor(rng, sp);
            Matrix shrunk = v.lam;
            for (Eigen::Index i = 0; i < shrunk.rows(); ++i)
                for (Eigen::Index j = 0; j < shrunk.cols(); ++j)
                    shrunk(i, j) *= (rng.unif() < 0.5 ? -1.0 : 1.0) * rng.unif();
            CoeffTensor u(shrunk, sp.left, sp.right);
            if (!lattice_leq(lattice_abs(u), lattice_abs(v)))
                fail(r, "generator bug: |u| not <= |v|");
            double au = besselian_crossnorm(u, kc).value;
            double av = besselian_crossnorm(v, kc).value;
            if (au > av + 1e-9 * (1.0 + av))
                fail(r, "norm compatibility: " + fmt(au) + " > " + fmt(av));
        }
    });

    ck.run("abs_preserves_alpha", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 42);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            auto pairs = exact_pairs(rng.uniform_int(2, 5), rng.uniform_int(2, 5));
            const SpacePair& sp = pairs[t % pairs.size()];
            CoeffTensor u = random_tensor(rng, sp);
            double a = besselian_crossnorm(u, kc).value;
            double aa = besselian_crossnorm(lattice_abs(u), kc).value;
            if (std::abs(a - aa) > 1e-9 * (1.0 + a))
                fail(r, fmt(a) + " vs " + fmt(aa));
        }
    });

    ck.run("isometries_match_crossnorm", [&](PropertyResult& r) {
        Rng rng(cfg.seed + 43);
        for (int t = 0; t < cfg.samples && r.passed; ++t) {
            int k = rng.uniform_int(1, 6), kp = rng.uniform_int(1, 6);
            Matrix lam = random_matrix(rng, k, kp);
            {
                CoeffTensor u(lam, SpaceDescriptor::c0(k), SpaceDescriptor::c0(kp));
                double iso = iso_c0_c0(u), a = besselian_crossnorm(u, kc).value;
                if (std::abs(iso - a) > 1e-10 * (1.0 + a))
                    fail(r, "c0xc0: " + fmt(iso) + " vs " + fmt(a));
            }
            {
                CoeffTensor u(lam, SpaceDescriptor::lp(1.0, k), SpaceDescriptor::lp(1.0, kp));
                double iso = iso_l1_l1(u), a = besselian_crossnorm(u, kc).value;
                if (std::abs(iso - a) > 1e-10 * (1.0 + a))
                    fail(r, "l1xl1: " + fmt(iso) + " vs " + fmt(a));
            }
            {
                double p = 1.5 + 2.0 * rng.unif();
                CoeffTensor u(lam, SpaceDescriptor::lp(p, k), SpaceDescriptor::lp(1.0, kp));
                double iso = iso_lp_l1(u), a = besselian_crossnorm(u, kc).value;
                if (std::abs(iso - a) > 1e-8 * (1.0 + a))
                    fail(r, "lp(l1): " + fmt(iso) + " vs " + fmt(a));
            }
            {
                CoeffTensor u(lam, SpaceDescriptor::c0(k), SpaceDescriptor::lp(2.0, kp));
                double iso = iso_c0_F(u), a = besselian_crossnorm(u, kc).value;
                if (std::abs(iso - a) > 1e-8 * (1.0 + a))
                    fail(r, "c0(F): " + fmt(iso) + " vs " + fmt(a));
            }
        }
    });

    return ck.results;
}

std::vector<PropertyResult> verify_all(const VerifyConfig& cfg) {
    std::vector<PropertyResult> all;
    for (auto&& part : {verify_axioms(cfg), verify_paper(cfg), verify_frames(cfg),
                        verify_lattice(cfg)})
        all.insert(all.end(), part.begin(), part.end());
    return all;
}

}  // namespace besselnorm
