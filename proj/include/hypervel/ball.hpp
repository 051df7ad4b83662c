#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "params.hpp"
#include "scalar.hpp"

namespace hypervel {

/// Norm policy for the transport maps. Any strictly positive homogeneous
/// norm works; only the Euclidean instantiation is exercised by the tests.
struct EuclideanNorm {
    static double eval(const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }
};

namespace detail {

/// tanh(a)/a, switching to the Taylor expansion 1 - a^2/3 below 1e-8 where
/// the direct quotient loses accuracy.
inline double tanh_ratio(double a) {
    if (a < 1e-8) return 1.0 - a * a / 3.0;
    return std::tanh(a) / a;
}

/// Rescales a vector that rounded onto or past the ball boundary back to
/// the nearest safely interior radius. Exact results are always strictly
/// inside; only rounding can land on the boundary.
inline void clamp_into_ball(std::vector<double>& v, double c) {
    double n = EuclideanNorm::eval(v);
    if (n < c) return;
    const double factor = (c / n) * (1.0 - 4e-16);
    for (double& x : v) x *= factor;
}

} // namespace detail

/// Radial transport of a rapidity vector into the open ball of radius c:
/// v maps to (c * tanh(|v|) / |v|) * v. The zero vector is a fixed point.
template <class Norm = EuclideanNorm>
std::vector<double> ball_phi_vec(const std::vector<double>& v, double c) {
    const double r = Norm::eval(v);
    if (r == 0.0) return std::vector<double>(v.size(), 0.0);
    const double scale = c * detail::tanh_ratio(r);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = scale * v[i];
    detail::clamp_into_ball(out, c);
    return out;
}

/// Inverse transport: u in the open ball maps to (atanh(|u|/c) / |u|) * u.
template <class Norm = EuclideanNorm>
std::vector<double> ball_phi_inv_vec(const std::vector<double>& u, double c) {
    const double r = Norm::eval(u);
    if (r == 0.0) return std::vector<double>(u.size(), 0.0);
    const double scale = std::atanh(r / c) / r;
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = scale * u[i];
    return out;
}

/// Commutative group addition on the open ball, transported from vector
/// addition of rapidities: the rapidity images are added componentwise and
/// carried back with ball_phi. The combined rapidity A is formed directly,
/// A = atanh(|u|/c) u/|u| + atanh(|v|/c) v/|v|, and the return trip uses
/// tanh(|A|)/|A| with its small-|A| expansion, so exact cancellation
/// (v == additive inverse of u) yields exactly zero.
template <class Norm = EuclideanNorm>
std::vector<double> ball_add_vec(const std::vector<double>& u, const std::vector<double>& v,
                                 double c) {
    detail::require_same_dimension(u.size(), v.size(), "ball_add");
    const double ru = Norm::eval(u);
    const double rv = Norm::eval(v);
    if (ru == 0.0) return v;
    if (rv == 0.0) return u;
    const double au = std::atanh(ru / c) / ru;
    const double av = std::atanh(rv / c) / rv;
    std::vector<double> a(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) a[i] = au * u[i] + av * v[i];
    const double na = Norm::eval(a);
    const double scale = c * detail::tanh_ratio(na);
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = scale * a[i];
    detail::clamp_into_ball(out, c);
    return out;
}

/// A point of the open ball of radius c in R^n (Euclidean norm), the
/// carrier of the transported addition.
class BallVector {
  public:
    BallVector(std::vector<double> components, Params params)
        : components_(std::move(components)), params_(params) {
        for (double x : components_) {
            if (!std::isfinite(x)) {
                throw DomainViolation("BallVector: components must be finite");
            }
        }
        if (EuclideanNorm::eval(components_) >= params_.c) {
            throw DomainViolation("BallVector: norm must be strictly less than c");
        }
    }

    const std::vector<double>& components() const { return components_; }
    const Params& params() const { return params_; }
    std::size_t dimension() const { return components_.size(); }
    double norm() const { return EuclideanNorm::eval(components_); }

  private:
    std::vector<double> components_;
    Params params_;
};

/// Transport of a rapidity vector into the ball carrier.
inline BallVector ball_phi(const std::vector<double>& v, const Params& params) {
    for (double x : v) {
        if (!std::isfinite(x)) throw DomainViolation("ball_phi: components must be finite");
    }
    return BallVector(ball_phi_vec(v, params.c), params);
}

/// Rapidity vector of a ball point.
inline std::vector<double> ball_phi_inv(const BallVector& u) {
    return ball_phi_inv_vec(u.components(), u.params().c);
}

/// Transported addition on the ball.
inline BallVector ball_add(const BallVector& u, const BallVector& v) {
    detail::require_same_scale(u.params(), v.params(), "ball_add");
    return BallVector(ball_add_vec(u.components(), v.components(), u.params().c), u.params());
}

/// Additive inverse: componentwise negation (the rapidity negates).
inline BallVector ball_neg(const BallVector& u) {
    std::vector<double> out = u.components();
    for (double& x : out) x = -x;
    return BallVector(std::move(out), u.params());
}

/// A point of the open disc of radius c in the complex plane. Addition is
/// the two-dimensional ball addition; multiplication transports complex
/// multiplication of the rapidity images, making the disc a field.
class ComplexBallPoint {
  public:
    ComplexBallPoint(double re, double im, Params params)
        : re_(re), im_(im), params_(params) {
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw DomainViolation("ComplexBallPoint: components must be finite");
        }
        if (std::hypot(re, im) >= params_.c) {
            throw DomainViolation("ComplexBallPoint: modulus must be strictly less than c");
        }
    }

    double re() const { return re_; }
    double im() const { return im_; }
    const Params& params() const { return params_; }
    double modulus() const { return std::hypot(re_, im_); }

  private:
    double re_;
    double im_;
    Params params_;
};

inline ComplexBallPoint complex_add(const ComplexBallPoint& u, const ComplexBallPoint& v) {
    detail::require_same_scale(u.params(), v.params(), "complex_add");
    const std::vector<double> a{u.re(), u.im()};
    const std::vector<double> b{v.re(), v.im()};
    const std::vector<double> s = ball_add_vec(a, b, u.params().c);
    return ComplexBallPoint(s[0], s[1], u.params());
}

inline ComplexBallPoint complex_neg(const ComplexBallPoint& u) {
    return ComplexBallPoint(-u.re(), -u.im(), u.params());
}

/// Transported complex multiplication: the rapidity images are multiplied
/// as complex numbers and carried back. In polar form the modulus is
/// c * tanh(atanh(r/c) * atanh(s/c)) and the arguments add.
inline ComplexBallPoint complex_mul(const ComplexBallPoint& u, const ComplexBallPoint& v) {
    detail::require_same_scale(u.params(), v.params(), "complex_mul");
    const double c = u.params().c;
    const std::vector<double> zu = ball_phi_inv_vec({u.re(), u.im()}, c);
    const std::vector<double> zv = ball_phi_inv_vec({v.re(), v.im()}, c);
    const std::complex<double> w =
        std::complex<double>(zu[0], zu[1]) * std::complex<double>(zv[0], zv[1]);
    const std::vector<double> out = ball_phi_vec({w.real(), w.imag()}, c);
    return ComplexBallPoint(out[0], out[1], u.params());
}

/// Identity of complex_mul: modulus c * tanh(1), argument 0.
inline ComplexBallPoint complex_mul_identity(const Params& params) {
    return ComplexBallPoint(params.c * std::tanh(1.0), 0.0, params);
}

/// Multiplicative inverse of a nonzero point: the rapidity image inverts.
inline ComplexBallPoint complex_mul_inverse(const ComplexBallPoint& u) {
    if (u.re() == 0.0 && u.im() == 0.0) {
        throw InverseUndefined("complex_mul_inverse: 0 has no multiplicative inverse");
    }
    const double c = u.params().c;
    const std::vector<double> zu = ball_phi_inv_vec({u.re(), u.im()}, c);
    const std::complex<double> w = 1.0 / std::complex<double>(zu[0], zu[1]);
    const std::vector<double> out = ball_phi_vec({w.real(), w.imag()}, c);
    return ComplexBallPoint(out[0], out[1], u.params());
}

} // namespace hypervel
