#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace hypervel {

/// A scalar bijection used as one link of a chained coordinate map. The
/// forward/inverse pair is spot-checked at construction: every probe point
/// must round-trip through inverse(forward(x)) to within 1e-9.
class BijectionDescriptor {
  public:
    using Fn = std::function<double(double)>;

    BijectionDescriptor(std::string name, Fn forward, Fn inverse,
                        std::vector<double> probe_points)
        : name_(std::move(name)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
        for (double x : probe_points) {
            const double back = inverse_(forward_(x));
            if (!(std::abs(back - x) <= 1e-9 * std::max(1.0, std::abs(x)))) {
                throw DomainViolation("BijectionDescriptor '" + name_ +
                                      "': forward/inverse failed the round-trip spot check");
            }
        }
    }

    const std::string& name() const { return name_; }
    double forward(double x) const { return forward_(x); }
    double inverse(double y) const { return inverse_(y); }

  private:
    std::string name_;
    Fn forward_;
    Fn inverse_;
};

/// n + 1 copies of the identity map (links f_0 .. f_n of a chain over n
/// coordinates).
inline std::vector<BijectionDescriptor> identity_family(std::size_t n) {
    std::vector<BijectionDescriptor> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out.emplace_back("identity", [](double x) { return x; }, [](double y) { return y; },
                         std::vector<double>{-0.5, 0.25, 1.0});
    }
    return out;
}

/// n + 1 copies of tanh (inverse atanh), the family behind the bounded
/// carriers below.
inline std::vector<BijectionDescriptor> tanh_family(std::size_t n) {
    std::vector<BijectionDescriptor> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out.emplace_back("tanh", [](double x) { return std::tanh(x); },
                         [](double y) { return std::atanh(y); },
                         std::vector<double>{-0.5, 0.25, 1.0});
    }
    return out;
}

/// Chained coordinate map over links f_0 .. f_n:
///   F(x) = (f_0(x_1), f_2(x_2)/f_1(x_1), ..., f_n(x_n)/f_{n-1}(x_{n-1})).
/// Each coordinate after the first divides by the previous link's value,
/// which must be nonzero.
inline std::vector<double> chain_forward(const std::vector<double>& x,
                                         const std::vector<BijectionDescriptor>& links) {
    const std::size_t n = x.size();
    if (n == 0) throw DomainViolation("chain_forward: empty input");
    if (links.size() != n + 1) {
        throw DomainViolation("chain_forward: a chain over n coordinates needs n + 1 links");
    }
    std::vector<double> y(n);
    y[0] = links[0].forward(x[0]);
    for (std::size_t k = 1; k < n; ++k) {
        const double denom = links[k].forward(x[k - 1]);
        if (denom == 0.0) {
            throw DivisionByZero("chain_forward: intermediate link value is zero");
        }
        y[k] = links[k + 1].forward(x[k]) / denom;
    }
    for (double v : y) {
        if (!std::isfinite(v)) throw DomainViolation("chain_forward: value left the domain");
    }
    return y;
}

/// Inverse of chain_forward: with a = f_1(f_0^{-1}(y_1)),
///   x_1 = f_0^{-1}(y_1),  x_i = f_i^{-1}(a * y_2 * ... * y_i) for i >= 2.
inline std::vector<double> chain_inverse(const std::vector<double>& y,
                                         const std::vector<BijectionDescriptor>& links) {
    const std::size_t n = y.size();
    if (n == 0) throw DomainViolation("chain_inverse: empty input");
    if (links.size() != n + 1) {
        throw DomainViolation("chain_inverse: a chain over n coordinates needs n + 1 links");
    }
    std::vector<double> x(n);
    x[0] = links[0].inverse(y[0]);
    if (n > 1) {
        double prod = links[1].forward(x[0]);
        for (std::size_t k = 1; k < n; ++k) {
            prod *= y[k];
            x[k] = links[k + 1].inverse(prod);
        }
    }
    for (double v : x) {
        if (!std::isfinite(v)) throw DomainViolation("chain_inverse: value left the domain");
    }
    return x;
}

/// A point of the ordered-orthant domain
///   D_n = { 0 < x_n <= ... <= x_1 }  union  { (x_1, 0, ..., 0), x_1 >= 0 }.
/// The second (trailing-zero) piece keeps the origin and the first axis.
class DPoint {
  public:
    explicit DPoint(std::vector<double> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw DomainViolation("DPoint: at least one coordinate required");
        for (double v : coords_) {
            if (!std::isfinite(v)) throw DomainViolation("DPoint: coordinates must be finite");
        }
        if (trailing_zero()) {
            if (coords_[0] < 0.0) {
                throw DomainViolation("DPoint: first coordinate must be non-negative");
            }
        } else {
            if (!(coords_.back() > 0.0)) {
                throw DomainViolation("DPoint: coordinates must be strictly positive");
            }
            for (std::size_t i = 0; i + 1 < coords_.size(); ++i) {
                if (!(coords_[i] >= coords_[i + 1])) {
                    throw DomainViolation("DPoint: coordinates must be non-increasing");
                }
            }
        }
    }

    const std::vector<double>& coords() const { return coords_; }
    std::size_t dimension() const { return coords_.size(); }

    /// True when every coordinate after the first is zero (always true for
    /// one-dimensional points).
    bool trailing_zero() const {
        for (std::size_t i = 1; i < coords_.size(); ++i) {
            if (coords_[i] != 0.0) return false;
        }
        return true;
    }

  private:
    std::vector<double> coords_;
};

/// A point of the image domain
///   H_n = (0,1) x (0,1]^{n-1}  union  { (y_1, 0, ..., 0), 0 <= y_1 < 1 }.
class HPoint {
  public:
    explicit HPoint(std::vector<double> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw DomainViolation("HPoint: at least one coordinate required");
        for (double v : coords_) {
            if (!std::isfinite(v)) throw DomainViolation("HPoint: coordinates must be finite");
        }
        if (trailing_zero()) {
            if (!(coords_[0] >= 0.0 && coords_[0] < 1.0)) {
                throw DomainViolation("HPoint: first coordinate must lie in [0, 1)");
            }
        } else {
            if (!(coords_[0] > 0.0 && coords_[0] < 1.0)) {
                throw DomainViolation("HPoint: first coordinate must lie in (0, 1)");
            }
            for (std::size_t i = 1; i < coords_.size(); ++i) {
                if (!(coords_[i] > 0.0 && coords_[i] <= 1.0)) {
                    throw DomainViolation("HPoint: later coordinates must lie in (0, 1]");
                }
            }
        }
    }

    const std::vector<double>& coords() const { return coords_; }
    std::size_t dimension() const { return coords_.size(); }

    bool trailing_zero() const {
        for (std::size_t i = 1; i < coords_.size(); ++i) {
            if (coords_[i] != 0.0) return false;
        }
        return true;
    }

  private:
    std::vector<double> coords_;
};

/// The tanh chain map D_n -> H_n:
///   (x_1, ..., x_n) |-> (tanh x_1, tanh x_2/tanh x_1, ..., tanh x_n/tanh x_{n-1}),
/// with the trailing-zero piece mapping to (tanh x_1, 0, ..., 0).
inline HPoint tanh_map_forward(const DPoint& x) {
    const auto& v = x.coords();
    std::vector<double> y(v.size(), 0.0);
    y[0] = detail::clamp_into_open_interval(std::tanh(v[0]), 1.0);
    if (!x.trailing_zero()) {
        double prev = std::tanh(v[0]);
        for (std::size_t i = 1; i < v.size(); ++i) {
            const double cur = std::tanh(v[i]);
            double ratio = cur / prev;
            if (ratio > 1.0) ratio = 1.0; // exact result is <= 1; rounding guard
            y[i] = ratio;
            prev = cur;
        }
    }
    return HPoint(std::move(y));
}

/// Inverse of tanh_map_forward: the partial products y_1 y_2 ... y_i
/// telescope back to tanh x_i, so x_i = atanh(y_1 ... y_i).
inline DPoint tanh_map_inverse(const HPoint& y) {
    const auto& v = y.coords();
    std::vector<double> x(v.size(), 0.0);
    x[0] = std::atanh(v[0]);
    if (!y.trailing_zero()) {
        double prod = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) {
            prod *= v[i];
            x[i] = std::atanh(prod);
        }
    }
    return DPoint(std::move(x));
}

/// Commutative monoid addition on H_n, transported from componentwise
/// Einstein addition of the partial products (scale constant 1):
///   z_1 = x_1 (+) y_1,
///   z_i = (x_1..x_i (+) y_1..y_i) / (x_1..x_{i-1} (+) y_1..y_{i-1}).
/// If either operand lies on the trailing-zero piece the result collapses
/// to (x_1 (+) y_1, 0, ..., 0); the identity element is the origin.
inline HPoint h_add(const HPoint& x, const HPoint& y) {
    detail::require_same_dimension(x.dimension(), y.dimension(), "h_add");
    const auto& a = x.coords();
    const auto& b = y.coords();
    const std::size_t n = a.size();
    std::vector<double> z(n, 0.0);
    const bool collapse = x.trailing_zero() || y.trailing_zero();
    double pa = a[0];
    double pb = b[0];
    double prev = einstein_add(pa, pb, 1.0); // exact when an operand is zero
    z[0] = prev;
    if (!collapse) {
        for (std::size_t i = 1; i < n; ++i) {
            pa *= a[i];
            pb *= b[i];
            const double cur = einstein_add(pa, pb, 1.0);
            double ratio = cur / prev;
            if (ratio > 1.0) ratio = 1.0; // exact result is <= 1; rounding guard
            z[i] = ratio;
            prev = cur;
        }
    }
    return HPoint(std::move(z));
}

/// A point of the plane cone  D = { |b| < a }  union  { (0, 0) }, closed
/// under componentwise addition and the hyperbolic product.
class ConePoint {
  public:
    ConePoint(double a, double b) : a_(a), b_(b) {
        if (!std::isfinite(a) || !std::isfinite(b)) {
            throw DomainViolation("ConePoint: coordinates must be finite");
        }
        if (!(a == 0.0 && b == 0.0) && !(std::abs(b) < a)) {
            throw DomainViolation("ConePoint: requires |b| < a or the origin");
        }
    }

    double a() const { return a_; }
    double b() const { return b_; }
    bool is_origin() const { return a_ == 0.0 && b_ == 0.0; }

  private:
    double a_;
    double b_;
};

/// Hyperbolic (split-complex) product (a, b)(c, d) = (ac + bd, ad + bc).
/// The cone is closed under it because (a+-b)(c+-d) > 0; the origin is
/// absorbing.
inline ConePoint hyperbolic_mul(const ConePoint& p, const ConePoint& q) {
    return ConePoint(p.a() * q.a() + p.b() * q.b(), p.a() * q.b() + p.b() * q.a());
}

/// Multiplicative inverse under the hyperbolic product:
///   (a, b)^{-1} = (a, -b) / (a^2 - b^2).
/// The origin (the annihilator) has no inverse.
inline ConePoint hyperbolic_inverse(const ConePoint& p) {
    if (p.is_origin()) {
        throw InverseUndefined("hyperbolic_inverse: the origin has no inverse");
    }
    const double det = p.a() * p.a() - p.b() * p.b();
    return ConePoint(p.a() / det, -p.b() / det);
}

/// A point of the two-dimensional image carrier
///   H = (0,1) x (-1,1)  union  { (0, 0) }.
class H2Point {
  public:
    H2Point(double y1, double y2) : y1_(y1), y2_(y2) {
        if (!std::isfinite(y1) || !std::isfinite(y2)) {
            throw DomainViolation("H2Point: coordinates must be finite");
        }
        if (!(y1 == 0.0 && y2 == 0.0) &&
            !(y1 > 0.0 && y1 < 1.0 && y2 > -1.0 && y2 < 1.0)) {
            throw DomainViolation("H2Point: requires y1 in (0,1), |y2| < 1, or the origin");
        }
    }

    double y1() const { return y1_; }
    double y2() const { return y2_; }
    bool is_origin() const { return y1_ == 0.0 && y2_ == 0.0; }

  private:
    double y1_;
    double y2_;
};

/// The two-coordinate chain map on the cone: (a, b) |-> (tanh a, tanh b / tanh a),
/// with the origin fixed.
inline H2Point cone_map_forward(const ConePoint& p) {
    if (p.is_origin()) return H2Point(0.0, 0.0);
    const double t1 = std::tanh(p.a());
    double r = std::tanh(p.b()) / t1;
    r = detail::clamp_into_open_interval(r, 1.0);
    return H2Point(detail::clamp_into_open_interval(t1, 1.0), r);
}

/// Inverse of cone_map_forward: (y1, y2) |-> (atanh y1, atanh(y1 y2)).
inline ConePoint cone_map_inverse(const H2Point& p) {
    if (p.is_origin()) return ConePoint(0.0, 0.0);
    return ConePoint(std::atanh(p.y1()), std::atanh(p.y1() * p.y2()));
}

/// Transported cone addition on H (closed form):
///   (x1, x2) (+) (y1, y2) = (x1 (+) y1, (x1 x2 (+) y1 y2) / (x1 (+) y1)),
/// Einstein sums at scale 1; the origin is the identity.
inline H2Point h2_add(const H2Point& x, const H2Point& y) {
    if (x.is_origin() && y.is_origin()) return H2Point(0.0, 0.0);
    const double first = (x.y1() == 0.0)   ? y.y1()
                         : (y.y1() == 0.0) ? x.y1()
                                           : einstein_add(x.y1(), y.y1(), 1.0);
    const double top = einstein_add(x.y1() * x.y2(), y.y1() * y.y2(), 1.0);
    double second = top / first;
    second = detail::clamp_into_open_interval(second, 1.0);
    return H2Point(first, second);
}

/// Transported hyperbolic product on H (closed form): with A = atanh x1,
/// B = atanh(x1 x2), C = atanh y1, D = atanh(y1 y2),
///   (x1, x2) (*) (y1, y2) = (tanh(AC + BD), tanh(AD + BC) / tanh(AC + BD)).
/// The origin annihilates.
inline H2Point h2_mul(const H2Point& x, const H2Point& y) {
    if (x.is_origin() || y.is_origin()) return H2Point(0.0, 0.0);
    const double a = std::atanh(x.y1());
    const double b = std::atanh(x.y1() * x.y2());
    const double c = std::atanh(y.y1());
    const double d = std::atanh(y.y1() * y.y2());
    const double first_rap = a * c + b * d;
    const double second_rap = a * d + b * c;
    const double t1 = std::tanh(first_rap);
    double r = std::tanh(second_rap) / t1;
    r = detail::clamp_into_open_interval(r, 1.0);
    return H2Point(detail::clamp_into_open_interval(t1, 1.0), r);
}

/// Identity of h2_mul: the image of the cone point (1, 0).
inline H2Point h2_mul_identity() { return H2Point(std::tanh(1.0), 0.0); }

/// Multiplicative inverse under h2_mul (undefined at the origin).
inline H2Point h2_mul_inverse(const H2Point& x) {
    if (x.is_origin()) {
        throw InverseUndefined("h2_mul_inverse: the origin has no inverse");
    }
    return cone_map_forward(hyperbolic_inverse(cone_map_inverse(x)));
}

} // namespace hypervel
