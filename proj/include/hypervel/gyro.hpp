#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "params.hpp"

namespace hypervel {

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// Relative guard band at the ball boundary for admissible velocities. The
/// gamma factor and the composition denominators degenerate at the
/// boundary itself; construction stops one part in 1e15 short of it.
inline constexpr double kGyroBand = 1e-15;

/// Rescales a composition result that rounded into the guard band back to
/// its edge. Activates only within ~1e-15 of the boundary.
inline void clamp_into_band(std::vector<double>& v, double c) {
    const double limit = c * (1.0 - kGyroBand);
    const double n = norm2(v);
    if (n < limit) return;
    const double factor = (limit / n) * (1.0 - 4e-16);
    for (double& x : v) x *= factor;
}

} // namespace detail

/// Lorentz gamma factor 1 / sqrt(1 - |u|^2 / c^2). The radicand is formed
/// as (1 - b)(1 + b) to keep accuracy for speeds near c.
inline double gamma_factor(const std::vector<double>& u, double c) {
    const double b = detail::norm2(u) / c;
    if (b >= 1.0) throw DomainViolation("gamma_factor: speed must be below c");
    return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
}

/// An admissible velocity in R^3: Euclidean norm strictly below
/// c * (1 - 1e-15), the guard band keeping gamma and the composition
/// denominators well conditioned.
class GyroVector3 {
  public:
    GyroVector3(double x, double y, double z, Params params)
        : components_{x, y, z}, params_(params) {
        for (double v : components_) {
            if (!std::isfinite(v)) {
                throw DomainViolation("GyroVector3: components must be finite");
            }
        }
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n >= params_.c * (1.0 - detail::kGyroBand)) {
            throw DomainViolation("GyroVector3: norm must stay below c * (1 - 1e-15)");
        }
    }

    const std::array<double, 3>& components() const { return components_; }
    const Params& params() const { return params_; }
    double norm() const {
        return std::sqrt(components_[0] * components_[0] + components_[1] * components_[1] +
                         components_[2] * components_[2]);
    }

    std::vector<double> to_vector() const {
        return {components_[0], components_[1], components_[2]};
    }

  private:
    std::array<double, 3> components_;
    Params params_;
};

/// Relativistic velocity composition in the inner-product form, valid in
/// any dimension:
///   u (+) v = [u + v/gamma_u + (gamma_u/(1+gamma_u)) <u|v> u / c^2]
///             / (1 + <u|v>/c^2).
inline std::vector<double> gyro_add_inner_vec(const std::vector<double>& u,
                                              const std::vector<double>& v, double c) {
    detail::require_same_dimension(u.size(), v.size(), "gyro_add");
    const double gu = gamma_factor(u, c);
    const double uv = detail::dot(u, v);
    const double denom = 1.0 + uv / (c * c);
    const double coeff = (gu / (1.0 + gu)) * uv / (c * c);
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = (u[i] + v[i] / gu + coeff * u[i]) / denom;
    }
    detail::clamp_into_band(out, c);
    return out;
}

namespace detail {

inline std::array<double, 3> cross(const std::array<double, 3>& a,
                                   const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace detail

/// The same composition written with the double cross product,
///   u (+) v = [u + v + (gamma_u/(1+gamma_u)) u x (u x v) / c^2]
///             / (1 + <u|v>/c^2),
/// three dimensions only. Agrees with the inner-product form through the
/// Lagrange expansion of u x (u x v).
inline GyroVector3 gyro_add_cross(const GyroVector3& u, const GyroVector3& v) {
    detail::require_same_scale(u.params(), v.params(), "gyro_add");
    const double c = u.params().c;
    const auto& a = u.components();
    const auto& b = v.components();
    const double gu = gamma_factor(u.to_vector(), c);
    const double uv = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    const double denom = 1.0 + uv / (c * c);
    const std::array<double, 3> uxv = detail::cross(a, b);
    const std::array<double, 3> uxuxv = detail::cross(a, uxv);
    const double coeff = gu / (1.0 + gu) / (c * c);
    std::vector<double> out(3);
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = (a[i] + b[i] + coeff * uxuxv[i]) / denom;
    }
    detail::clamp_into_band(out, c);
    return GyroVector3(out[0], out[1], out[2], u.params());
}

/// Inner-product form on the typed carrier.
inline GyroVector3 gyro_add_inner(const GyroVector3& u, const GyroVector3& v) {
    detail::require_same_scale(u.params(), v.params(), "gyro_add");
    const std::vector<double> out = gyro_add_inner_vec(u.to_vector(), v.to_vector(), u.params().c);
    return GyroVector3(out[0], out[1], out[2], u.params());
}

/// Residual of the Lagrange expansion u x (u x v) = <u|v> u - |u|^2 v,
/// as the largest absolute component difference. Zero in exact arithmetic
/// for every u, v.
inline double lagrange_residual(const std::array<double, 3>& u, const std::array<double, 3>& v) {
    const std::array<double, 3> lhs = detail::cross(u, detail::cross(u, v));
    const double uv = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    const double uu = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double rhs = uv * u[i] - uu * v[i];
        worst = std::max(worst, std::abs(lhs[i] - rhs));
    }
    return worst;
}

/// Residual of the gamma composition identity
///   gamma(u (+) v) = gamma(u) gamma(v) (1 + <u|v>/c^2).
inline double gamma_identity_residual(const GyroVector3& u, const GyroVector3& v) {
    detail::require_same_scale(u.params(), v.params(), "gamma_identity_residual");
    const double c = u.params().c;
    const GyroVector3 w = gyro_add_inner(u, v);
    const double lhs = gamma_factor(w.to_vector(), c);
    const double uv = detail::dot(u.to_vector(), v.to_vector());
    const double rhs =
        gamma_factor(u.to_vector(), c) * gamma_factor(v.to_vector(), c) * (1.0 + uv / (c * c));
    return std::abs(lhs - rhs);
}

/// A point of the open unit ball in R^n, the carrier of the Moebius
/// automorphism maps (the scale constant is fixed at 1 here).
class UnitBallVector {
  public:
    explicit UnitBallVector(std::vector<double> components)
        : components_(std::move(components)) {
        for (double x : components_) {
            if (!std::isfinite(x)) {
                throw DomainViolation("UnitBallVector: components must be finite");
            }
        }
        if (detail::norm2(components_) >= 1.0) {
            throw DomainViolation("UnitBallVector: norm must be strictly less than 1");
        }
    }

    const std::vector<double>& components() const { return components_; }
    std::size_t dimension() const { return components_.size(); }
    double norm() const { return detail::norm2(components_); }

  private:
    std::vector<double> components_;
};

/// Moebius addition on the unit ball,
///   w (+) z = (w + P_w z + s_w Q_w z) / (1 + <w|z>),
/// with P_w the projection onto w, Q_w = I - P_w and s_w = sqrt(1-|w|^2).
/// For w = 0 it reduces to z. Throws SingularDenominator when |1 + <w|z>|
/// falls below 1e-14.
inline UnitBallVector moebius_add(const UnitBallVector& w, const UnitBallVector& z) {
    detail::require_same_dimension(w.dimension(), z.dimension(), "moebius_add");
    const auto& wv = w.components();
    const auto& zv = z.components();
    const double ww = detail::dot(wv, wv);
    if (ww == 0.0) return z;
    const double wz = detail::dot(wv, zv);
    const double denom = 1.0 + wz;
    if (std::abs(denom) < 1e-14) {
        throw SingularDenominator("moebius_add: denominator 1 + <w|z> is too close to zero");
    }
    const double s = std::sqrt(1.0 - ww);
    const double proj = wz / ww;
    std::vector<double> out(wv.size());
    for (std::size_t i = 0; i < wv.size(); ++i) {
        const double p = proj * wv[i];     // P_w z
        const double q = zv[i] - p;        // Q_w z
        out[i] = (wv[i] + p + s * q) / denom;
    }
    detail::clamp_into_band(out, 1.0);
    return UnitBallVector(std::move(out));
}

/// The involution phi_w(z) = w (+) (-z). Applying it twice returns z.
inline UnitBallVector moebius_involution(const UnitBallVector& w, const UnitBallVector& z) {
    std::vector<double> nz = z.components();
    for (double& x : nz) x = -x;
    return moebius_add(w, UnitBallVector(std::move(nz)));
}

} // namespace hypervel
