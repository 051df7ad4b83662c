#pragma once

#include <cmath>
#include <compare>

#include "errors.hpp"
#include "extended_real.hpp"
#include "params.hpp"

namespace hypervel {

namespace detail {

/// Nudges a value that rounded onto (or past) the boundary back to the
/// nearest representable interior point of (-c, c). Near the boundary the
/// rational form of the addition can round to exactly +-c even though the
/// exact result is strictly inside; without this the absorbing element
/// would be forged by rounding.
inline double clamp_into_open_interval(double x, double c) {
    if (x >= c) return std::nextafter(c, 0.0);
    if (x <= -c) return std::nextafter(-c, 0.0);
    return x;
}

} // namespace detail

/// Einstein velocity composition (u + v) / (1 + uv/c^2) for interior
/// operands u, v in (-c, c). The result is guaranteed to stay in the open
/// interval; boundary handling (the absorbing rule for c) belongs to the
/// typed wrapper e_add.
inline double einstein_add(double u, double v, double c) {
    const double r = (u + v) / (1.0 + (u * v) / (c * c));
    return detail::clamp_into_open_interval(r, c);
}

/// Baker product c * tanh(atanh(u/c) * atanh(v/c)) for interior operands.
/// Multiplies the rapidities that einstein_add adds.
inline double baker_mul(double u, double v, double c) {
    const double r = c * std::tanh(std::atanh(u / c) * std::atanh(v / c));
    return detail::clamp_into_open_interval(r, c);
}

/// Multiplicative inverse under baker_mul: c * tanh(1 / atanh(u/c)).
/// Undefined at u == 0 (zero annihilates).
inline double baker_inverse(double u, double c) {
    if (u == 0.0) {
        throw InverseUndefined("baker_inverse: 0 has no multiplicative inverse");
    }
    const double r = c * std::tanh(1.0 / std::atanh(u / c));
    return detail::clamp_into_open_interval(r, c);
}

/// An Einstein number: a value in the half-open interval (-c, c] together
/// with its Params. The boundary c is admissible (it is the absorbing
/// element of e_add); -c is not.
class EScalar {
  public:
    EScalar(double value, Params params) : value_(value), params_(params) {
        if (!std::isfinite(value) || value <= -params_.c || value > params_.c) {
            throw DomainViolation("EScalar: value must lie in (-c, c]");
        }
    }

    double value() const { return value_; }
    const Params& params() const { return params_; }

    /// True exactly when this is the absorbing element c.
    bool at_boundary() const { return value_ == params_.c; }

    friend bool operator==(const EScalar& a, const EScalar& b) {
        return a.value_ == b.value_ && a.params_ == b.params_;
    }

  private:
    double value_;
    Params params_;
};

/// The order isomorphism phi(v) = c * tanh(v) from the extended reals onto
/// (-c, c]. The infinite element maps to c exactly; every finite argument
/// lands strictly inside the interval (saturated tanh values are nudged to
/// the nearest interior double, so c is reachable only from infinity).
inline EScalar phi(const ExtendedReal& v, const Params& params) {
    if (v.is_infinite()) return EScalar(params.c, params);
    const double r = params.c * std::tanh(v.value());
    return EScalar(detail::clamp_into_open_interval(r, params.c), params);
}

/// Inverse of phi: atanh(u/c) for interior u, the infinite element for c.
inline ExtendedReal phi_inv(const EScalar& u) {
    if (u.at_boundary()) return ExtendedReal::infinity();
    return ExtendedReal(std::atanh(u.value() / u.params().c));
}

/// Einstein addition on (-c, c]. c is absorbing: if either operand is the
/// boundary the result is the boundary; interior operands compose through
/// einstein_add and stay interior.
inline EScalar e_add(const EScalar& u, const EScalar& v) {
    detail::require_same_scale(u.params(), v.params(), "e_add");
    const Params& p = u.params();
    if (u.at_boundary() || v.at_boundary()) return EScalar(p.c, p);
    return EScalar(einstein_add(u.value(), v.value(), p.c), p);
}

/// Additive inverse. Defined on the interior only; the absorbing element
/// has no inverse.
inline EScalar e_neg(const EScalar& u) {
    if (u.at_boundary()) {
        throw BoundaryNotInvertible("e_neg: the absorbing element has no additive inverse");
    }
    return EScalar(-u.value(), u.params());
}

/// Baker multiplication on the interior (-c, c). The boundary is excluded:
/// its rapidity is infinite and the product is not defined there.
inline EScalar e_mul(const EScalar& u, const EScalar& v) {
    detail::require_same_scale(u.params(), v.params(), "e_mul");
    if (u.at_boundary() || v.at_boundary()) {
        throw BoundaryNotInvertible("e_mul: undefined at the boundary element");
    }
    const Params& p = u.params();
    return EScalar(baker_mul(u.value(), v.value(), p.c), p);
}

/// Identity element of e_mul: c * tanh(1), the image of rapidity 1.
inline EScalar e_mul_identity(const Params& params) {
    return EScalar(params.c * std::tanh(1.0), params);
}

/// Total order on (-c, c], inherited from the reals (c is the maximum).
inline std::strong_ordering e_compare(const EScalar& u, const EScalar& v) {
    detail::require_same_scale(u.params(), v.params(), "e_compare");
    if (u.value() < v.value()) return std::strong_ordering::less;
    if (u.value() > v.value()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace hypervel
