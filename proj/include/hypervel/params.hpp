#pragma once

#include <cmath>
#include <cstddef>

#include "errors.hpp"

namespace hypervel {

/// Shared parameters for all carrier types: the scale constant c (the
/// boundary of the admissible interval or ball) and a default tolerance
/// used by approximate comparisons.
struct Params {
    double c = 1.0;
    double tol = 1e-12;

    Params() = default;
    Params(double c_, double tol_ = 1e-12) : c(c_), tol(tol_) {
        if (!std::isfinite(c) || c <= 0.0) {
            throw DomainViolation("Params: c must be finite and positive");
        }
        if (!std::isfinite(tol) || tol < 0.0) {
            throw DomainViolation("Params: tol must be finite and non-negative");
        }
    }

    friend bool operator==(const Params& a, const Params& b) {
        return a.c == b.c && a.tol == b.tol;
    }
};

namespace detail {

/// Operations that combine two carriers require the same scale constant.
inline void require_same_scale(const Params& a, const Params& b, const char* what) {
    if (a.c != b.c) {
        throw ParamsMismatch(std::string(what) + ": operands use different scale constants");
    }
}

inline void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": operands have different dimensions");
    }
}

} // namespace detail

} // namespace hypervel
