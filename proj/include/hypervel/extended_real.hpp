#pragma once

#include <cmath>
#include <ostream>

#include "errors.hpp"

namespace hypervel {

/// A real number extended with a single point at (positive) infinity.
///
/// The infinite element is carried as an explicit tag, never as an IEEE
/// infinity, so arithmetic on the finite payload cannot silently produce
/// or consume it. NaN and IEEE infinities are rejected on construction.
class ExtendedReal {
  public:
    ExtendedReal() : value_(0.0), infinite_(false) {}

    /// Wraps a finite value.
    explicit ExtendedReal(double value) : value_(value), infinite_(false) {
        if (!std::isfinite(value)) {
            throw DomainViolation("ExtendedReal: finite value required");
        }
    }

    /// The single infinite element.
    static ExtendedReal infinity() {
        ExtendedReal r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }

    /// The finite payload; throws if this is the infinite element.
    double value() const {
        if (infinite_) {
            throw DomainViolation("ExtendedReal: no finite value at infinity");
        }
        return value_;
    }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
        if (x.infinite_) return os << "inf";
        return os << x.value_;
    }

  private:
    double value_;
    bool infinite_;
};

} // namespace hypervel
