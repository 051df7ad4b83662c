#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "params.hpp"
#include "scalar.hpp"

namespace hypervel {

/// A weight-and-value pair: the weight a lives in [0, c) and the carried
/// value b in (-c, c). Pairs aggregate through weighted mean-like sums in
/// which the first coordinate is an ordinary Einstein sum and the second a
/// weight-normalized mean of the values.
class MeanPair {
  public:
    MeanPair(double a, double b, Params params) : a_(a), b_(b), params_(params) {
        if (!std::isfinite(a) || a < 0.0 || a >= params_.c) {
            throw DomainViolation("MeanPair: weight must lie in [0, c)");
        }
        if (!std::isfinite(b) || b <= -params_.c || b >= params_.c) {
            throw DomainViolation("MeanPair: value must lie in (-c, c)");
        }
    }

    double a() const { return a_; }
    double b() const { return b_; }
    const Params& params() const { return params_; }

  private:
    double a_;
    double b_;
    Params params_;
};

/// The algebra the weights live in: a commutative addition on [0, c), a
/// product acting as weight composition, and the product's inverse for
/// nonzero elements.
struct ScalarSystem {
    std::string name;
    std::function<double(double, double)> add;
    std::function<double(double, double)> mul;
    std::function<double(double)> mul_inverse;
};

/// The algebra the values live in: a commutative group addition on
/// (-c, c), the action of weights on values, and the reshaping bijection
/// zeta (with its inverse) that selects which mean is being taken.
struct ActionSystem {
    std::string name;
    std::function<double(double, double)> add;
    std::function<double(double, double)> act;
    std::function<double(double)> zeta;
    std::function<double(double)> zeta_inverse;
};

/// Options for the generic aggregation. When both weights are zero there
/// is no mean to take; the result carries designated_b as its value.
struct AggOptions {
    double designated_b = 0.0;
};

/// Generic weighted aggregation
///   (a1, b1) (+) (a2, b2) =
///     (a1 (+) a2, zeta^{-1}( u1 . zeta(b1)  (+)  u2 . zeta(b2) )),
/// where u_i = a_i (*) (a1 (+) a2)^{-1} are the normalized weights, (*)
/// and ^{-1} come from the weight system and (.) / (+) / zeta from the
/// action system. Both weights zero yields (0, designated_b).
inline MeanPair agg_add(const MeanPair& p, const MeanPair& q, const ScalarSystem& weights,
                        const ActionSystem& action, const AggOptions& options = {}) {
    detail::require_same_scale(p.params(), q.params(), "agg_add");
    if (p.a() == 0.0 && q.a() == 0.0) {
        return MeanPair(0.0, options.designated_b, p.params());
    }
    // A zero weight contributes nothing: the normalized weights degenerate
    // to (0, 1) and the sum collapses to the other pair. Branching instead
    // of evaluating keeps the inverse well defined for every weight.
    if (p.a() == 0.0) return q;
    if (q.a() == 0.0) return p;
    const double first = weights.add(p.a(), q.a());
    const double inv = weights.mul_inverse(first);
    const double u1 = weights.mul(p.a(), inv);
    const double u2 = weights.mul(q.a(), inv);
    const double s =
        action.add(action.act(u1, action.zeta(p.b())), action.act(u2, action.zeta(q.b())));
    return MeanPair(first, action.zeta_inverse(s), p.params());
}

/// Einstein weight system at scale c: Einstein addition, Baker product
/// and its inverse.
inline ScalarSystem einstein_scalar_system(double c) {
    return ScalarSystem{
        "einstein",
        [c](double x, double y) { return einstein_add(x, y, c); },
        [c](double x, double y) { return baker_mul(x, y, c); },
        [c](double x) { return baker_inverse(x, c); },
    };
}

/// Einstein action system at scale c with reshaping map
///   zeta(x) = c * tanh(eta(atanh(x/c))),
/// for a given rapidity reshaper eta. Values are clamped back into the
/// open interval when tanh saturates.
inline ActionSystem einstein_action_system(double c, std::string name,
                                           std::function<double(double)> eta,
                                           std::function<double(double)> eta_inverse) {
    auto zeta = [c, eta = std::move(eta)](double x) {
        return detail::clamp_into_open_interval(c * std::tanh(eta(std::atanh(x / c))), c);
    };
    auto zeta_inv = [c, eta_inverse = std::move(eta_inverse)](double y) {
        return detail::clamp_into_open_interval(c * std::tanh(eta_inverse(std::atanh(y / c))), c);
    };
    return ActionSystem{
        std::move(name),
        [c](double x, double y) { return einstein_add(x, y, c); },
        [c](double w, double x) { return baker_mul(w, x, c); },
        std::move(zeta),
        std::move(zeta_inv),
    };
}

/// Action system of the arithmetic mean: eta is the identity, so zeta is
/// the identity on (-c, c).
inline ActionSystem arithmetic_action_system(double c) {
    auto id = [](double x) { return x; };
    ActionSystem sys = einstein_action_system(c, "arithmetic", id, id);
    sys.zeta = id;
    sys.zeta_inverse = id;
    return sys;
}

/// Action system of the harmonic mean: eta(x) = 1/x extended by
/// eta(0) = 0 (the reshaper is then a self-inverse involution).
inline ActionSystem harmonic_action_system(double c) {
    auto recip = [](double x) { return x == 0.0 ? 0.0 : 1.0 / x; };
    return einstein_action_system(c, "harmonic", recip, recip);
}

/// Closed form of the arithmetic-mean aggregation: with rapidity weights
/// w_i = atanh(a_i/c) and rapidity values beta_i = atanh(b_i/c),
///   second = c * tanh( (w1 beta1 + w2 beta2) / (w1 + w2) ).
/// A zero weight drops its pair entirely; two zero weights yield (0, 0).
inline MeanPair mean_add_arithmetic(const MeanPair& p, const MeanPair& q) {
    detail::require_same_scale(p.params(), q.params(), "mean_add_arithmetic");
    if (p.a() == 0.0 && q.a() == 0.0) return MeanPair(0.0, 0.0, p.params());
    if (p.a() == 0.0) return q;
    if (q.a() == 0.0) return p;
    const double c = p.params().c;
    const double first = einstein_add(p.a(), q.a(), c);
    const double w1 = std::atanh(p.a() / c);
    const double w2 = std::atanh(q.a() / c);
    const double beta1 = std::atanh(p.b() / c);
    const double beta2 = std::atanh(q.b() / c);
    const double m = (w1 * beta1 + w2 * beta2) / (w1 + w2);
    const double second = detail::clamp_into_open_interval(c * std::tanh(m), c);
    return MeanPair(first, second, p.params());
}

/// Closed form of the harmonic-mean aggregation:
///   second = c * tanh( (w1 + w2) / (w1/beta1 + w2/beta2) ).
/// By the continuity convention a zero value forces second = 0, as does
/// an exactly cancelled denominator; a zero weight drops its pair.
inline MeanPair mean_add_harmonic(const MeanPair& p, const MeanPair& q) {
    detail::require_same_scale(p.params(), q.params(), "mean_add_harmonic");
    if (p.a() == 0.0 && q.a() == 0.0) return MeanPair(0.0, 0.0, p.params());
    if (p.a() == 0.0) return q;
    if (q.a() == 0.0) return p;
    const double c = p.params().c;
    const double first = einstein_add(p.a(), q.a(), c);
    if (p.b() == 0.0 || q.b() == 0.0) return MeanPair(first, 0.0, p.params());
    const double w1 = std::atanh(p.a() / c);
    const double w2 = std::atanh(q.a() / c);
    const double beta1 = std::atanh(p.b() / c);
    const double beta2 = std::atanh(q.b() / c);
    const double r = w1 / beta1 + w2 / beta2;
    if (r == 0.0) return MeanPair(first, 0.0, p.params());
    const double second = detail::clamp_into_open_interval(c * std::tanh((w1 + w2) / r), c);
    return MeanPair(first, second, p.params());
}

} // namespace hypervel
