#include "besselnorm/spaces.hpp"

#include <cmath>

namespace besselnorm {

Exponent dual_exponent(const Exponent& e) {
    if (e.is_infinite()) return Exponent::finite(1.0);
    double p = e.value();
    if (p == 1.0) return Exponent::infinity();
    return Exponent::finite(p / (p - 1.0));
}

std::string SpaceDescriptor::name() const {
    if (kind == SpaceKind::C0) return "c0[" + std::to_string(dim) + "]";
    return "l" + (exponent.is_infinite() ? std::string("inf")
                                         : std::to_string(exponent.value())) +
           "[" + std::to_string(dim) + "]";
}

double lp_norm(const ColVec& v, const Exponent& e) {
    if (v.size() == 0) return 0.0;
    if (e.is_infinite()) return v.cwiseAbs().maxCoeff();
    double p = e.value();
    if (p == 1.0) return v.cwiseAbs().sum();
    if (p == 2.0) return v.norm();
    // scale out the max to avoid overflow for large p
    double m = v.cwiseAbs().maxCoeff();
    if (m == 0.0) return 0.0;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        acc += std::pow(std::abs(v[i]) / m, p);
    return m * std::pow(acc, 1.0 / p);
}

double vector_norm(const Vector& v) { return lp_norm(v.coords, v.space.exponent); }

std::optional<std::vector<ColVec>> dual_ball_extreme_points(
    const SpaceDescriptor& space, std::uint64_t cap) {
    const int d = space.dim;
    const Exponent& e = space.exponent;
    if (e.is_infinite()) {
        // dual ball is the l1 ball: vertices ±e_i
        std::vector<ColVec> pts;
        pts.reserve(2 * static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            ColVec v = ColVec::Zero(d);
            v[i] = 1.0;
            pts.push_back(v);
            pts.push_back(-v);
        }
        return pts;
    }
    if (e.is_one()) {
        // dual ball is the l_inf ball: the 2^d sign vertices
        if (d >= 63 || (std::uint64_t(1) << d) > cap)
            throw CapExceeded("dual_ball_extreme_points: 2^dim exceeds cap");
        std::vector<ColVec> pts;
        pts.reserve(std::size_t(1) << d);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
            ColVec v(d);
            for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? -1.0 : 1.0;
            pts.push_back(v);
        }
        return pts;
    }
    return std::nullopt;  // smooth ball
}

}  // namespace besselnorm
