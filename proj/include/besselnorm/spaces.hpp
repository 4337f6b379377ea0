#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselnorm {

using Matrix = Eigen::MatrixXd;
using ColVec = Eigen::VectorXd;

/// Thrown when an exact enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// An ℓ_p exponent, p ∈ [1, ∞]. Infinity is a tag, not a float, so
/// dual(1) == ∞ is exact.
class Exponent {
public:
    static Exponent finite(double p) {
        if (!(p >= 1.0)) throw std::invalid_argument("Exponent: p must be >= 1");
        return Exponent(false, p);
    }
    static Exponent infinity() { return Exponent(true, 0.0); }

    bool is_infinite() const { return inf_; }
    /// Finite value; only valid when !is_infinite().
    double value() const {
        if (inf_) throw std::logic_error("Exponent::value on infinity");
        return p_;
    }
    bool is_one() const { return !inf_ && p_ == 1.0; }

    bool operator==(const Exponent& o) const {
        return inf_ == o.inf_ && (inf_ || p_ == o.p_);
    }
    bool operator!=(const Exponent& o) const { return !(*this == o); }

    std::string str() const { return inf_ ? "inf" : std::to_string(p_); }

private:
    Exponent(bool inf, double p) : inf_(inf), p_(p) {}
    bool inf_;
    double p_;
};

/// Conjugate exponent: p ↦ p/(p−1), 1 ↦ ∞, ∞ ↦ 1. Involution.
Exponent dual_exponent(const Exponent& e);

enum class SpaceKind { Lp, C0 };

/// Truncated sequence space: ℓ_p or c₀ at a fixed coordinate dimension.
/// c₀ truncations carry the same norms as ℓ_∞ truncations; the tag only
/// affects how the space is named in reports.
struct SpaceDescriptor {
    SpaceKind kind;
    Exponent exponent;  // norm exponent; ∞ for C0
    int dim;

    static SpaceDescriptor lp(Exponent e, int dim) {
        check_dim(dim);
        return SpaceDescriptor{SpaceKind::Lp, e, dim};
    }
    static SpaceDescriptor lp(double p, int dim) { return lp(Exponent::finite(p), dim); }
    static SpaceDescriptor lp_inf(int dim) { return lp(Exponent::infinity(), dim); }
    static SpaceDescriptor c0(int dim) {
        check_dim(dim);
        return SpaceDescriptor{SpaceKind::C0, Exponent::infinity(), dim};
    }

    bool same_norm_as(const SpaceDescriptor& o) const {
        return dim == o.dim && exponent == o.exponent;
    }
    bool operator==(const SpaceDescriptor& o) const {
        return kind == o.kind && dim == o.dim && exponent == o.exponent;
    }

    std::string name() const;

private:
    static void check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("SpaceDescriptor: dim must be >= 1");
    }
};

/// A coordinate vector tagged with the space it lives in.
struct Vector {
    ColVec coords;
    SpaceDescriptor space;

    Vector(ColVec c, SpaceDescriptor s) : coords(std::move(c)), space(s) {
        if (coords.size() != space.dim)
            throw DimensionMismatch("Vector: coords length != space.dim");
    }
};

/// Entries over {+1, −1}.
using SignVector = std::vector<int>;

/// ℓ_p norm of raw coordinates.
double lp_norm(const ColVec& v, const Exponent& e);

/// Norm of a vector in its own space.
double vector_norm(const Vector& v);

/// Extreme points of the dual unit ball of `space`, when that ball is a
/// polytope:
///   primal ℓ_∞/c₀  →  dual ℓ₁ ball, vertices ±e_i
///   primal ℓ₁      →  dual ℓ_∞ ball, vertices {±1}^dim
/// Returns nullopt for smooth balls (handled by optimization, not
/// enumeration). Throws CapExceeded when 2^dim would exceed `cap`.
std::optional<std::vector<ColVec>> dual_ball_extreme_points(
    const SpaceDescriptor& space, std::uint64_t cap = std::uint64_t(1) << 20);

}  // namespace besselnorm
