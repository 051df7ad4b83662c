/** @file
 *  @brief Normed-ball addition via tanh transport and the complex c-ball.
 */
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <hypervel/hypervel.hpp>

#include "oracles.hpp"

using namespace hypervel;
using Catch::Matchers::WithinAbs;

namespace {

const Params kUnit(1.0);

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_diff(const std::vector<double>& a, const std::vector<long double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - static_cast<double>(b[i])));
    }
    return m;
}

BallVector draw_ball(Xoshiro256pp& rng, std::size_t dim, double c, double max_norm) {
    return BallVector(rng.vector_with_norm(dim, rng.uniform(0.0, max_norm) * c), Params(c));
}

} // namespace

TEST_CASE("ball transport matches the reference values", "[ball]") {
    const BallVector u = ball_phi({3.0, 4.0}, kUnit);
    CHECK_THAT(u.components()[0], WithinAbs(oracle::frozen::kBallPhi34X, 1e-15));
    CHECK_THAT(u.components()[1], WithinAbs(oracle::frozen::kBallPhi34Y, 1e-15));
    CHECK_THAT(u.norm(), WithinAbs(oracle::frozen::kTanh5, 1e-15));

    const BallVector zero = ball_phi({0.0, 0.0, 0.0}, kUnit);
    CHECK(zero.components() == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("ball_add agrees with the long double transport", "[ball]") {
    Xoshiro256pp rng(31);
    for (std::size_t dim : {1u, 2u, 3u, 7u}) {
        for (int i = 0; i < 500; ++i) {
            const double c = (i % 2 == 0) ? 1.0 : 2.5;
            const BallVector u = draw_ball(rng, dim, c, 0.95);
            const BallVector v = draw_ball(rng, dim, c, 0.95);
            std::vector<long double> lu(u.components().begin(), u.components().end());
            std::vector<long double> lv(v.components().begin(), v.components().end());
            const auto want = oracle::ball_add(lu, lv, c);
            CHECK(max_diff(ball_add(u, v).components(), want) < 1e-13 * c);
        }
    }
}

TEST_CASE("ball addition is a commutative group", "[ball]") {
    Xoshiro256pp rng(37);
    for (std::size_t dim : {1u, 2u, 3u, 7u}) {
        for (int i = 0; i < 300; ++i) {
            const BallVector u = draw_ball(rng, dim, 1.0, 0.95);
            const BallVector v = draw_ball(rng, dim, 1.0, 0.95);
            CHECK(max_diff(ball_add(u, v).components(), ball_add(v, u).components()) < 1e-15);

            const BallVector zero(std::vector<double>(dim, 0.0), kUnit);
            CHECK(ball_add(u, zero).components() == u.components());
            CHECK(ball_add(zero, u).components() == u.components());

            // The inverse is the exact negation; the rapidity sum cancels
            // to the zero vector exactly, coordinate by coordinate.
            const auto back = ball_add(u, ball_neg(u)).components();
            CHECK(max_diff(back, std::vector<double>(dim, 0.0)) < 1e-15);
        }
    }
}

TEST_CASE("dimension one collapses to scalar einstein_add", "[ball]") {
    Xoshiro256pp rng(41);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform(-0.95, 0.95);
        const double v = rng.uniform(-0.95, 0.95);
        const BallVector w = ball_add(BallVector({u}, kUnit), BallVector({v}, kUnit));
        CHECK_THAT(w.components()[0], WithinAbs(einstein_add(u, v, 1.0), 1e-15));
    }
}

TEST_CASE("collinear operands add like their norms", "[ball]") {
    Xoshiro256pp rng(43);
    for (std::size_t dim : {2u, 3u, 7u}) {
        for (int i = 0; i < 300; ++i) {
            const auto dir = rng.unit_vector(dim);
            const double a = rng.uniform(0.05, 0.9);
            const double b = rng.uniform(0.05, 0.9);
            std::vector<double> ua(dim), vb(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                ua[k] = a * dir[k];
                vb[k] = b * dir[k];
            }
            const BallVector w = ball_add(BallVector(ua, kUnit), BallVector(vb, kUnit));
            CHECK_THAT(w.norm(), WithinAbs(einstein_add(a, b, 1.0), 1e-13));
        }
    }
}

TEST_CASE("ball transport round trips", "[ball]") {
    Xoshiro256pp rng(47);
    for (std::size_t dim : {1u, 2u, 3u, 7u}) {
        for (int i = 0; i < 300; ++i) {
            const auto v = rng.vector_with_norm(dim, rng.uniform(0.01, 5.0));
            const auto back = ball_phi_inv(ball_phi(v, kUnit));
            CHECK(max_diff(back, v) < 1e-9);
        }
    }
}

TEST_CASE("complex c-ball multiplication in polar form", "[ball]") {
    Xoshiro256pp rng(53);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < 1000; ++i) {
        const double r = rng.uniform(0.05, 0.9);
        const double s = rng.uniform(0.05, 0.9);
        const double ta = rng.uniform(0.0, two_pi);
        const double tb = rng.uniform(0.0, two_pi);
        const ComplexBallPoint u(r * std::cos(ta), r * std::sin(ta), kUnit);
        const ComplexBallPoint v(s * std::cos(tb), s * std::sin(tb), kUnit);
        const ComplexBallPoint w = complex_mul(u, v);

        const double want_mod = static_cast<double>(oracle::e_mul(r, s, 1.0));
        CHECK_THAT(w.modulus(), WithinAbs(want_mod, 1e-13));

        const double got_arg = std::atan2(w.im(), w.re());
        double d = got_arg - (ta + tb);
        d -= two_pi * std::round(d / two_pi);
        CHECK_THAT(d, WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("complex field structure", "[ball]") {
    const ComplexBallPoint one = complex_mul_identity(kUnit);
    CHECK(one.re() == oracle::frozen::kTanh1);
    CHECK(one.im() == 0.0);

    Xoshiro256pp rng(59);
    for (int i = 0; i < 500; ++i) {
        // Small moduli invert to huge rapidities where tanh saturates, so
        // stay in the band where the inverse is well conditioned.
        const double r = rng.uniform(0.15, 0.9);
        const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const ComplexBallPoint u(r * std::cos(t), r * std::sin(t), kUnit);

        const ComplexBallPoint prod = complex_mul(u, complex_mul_inverse(u));
        CHECK_THAT(prod.re(), WithinAbs(one.re(), 1e-10));
        CHECK_THAT(prod.im(), WithinAbs(one.im(), 1e-10));

        CHECK_THAT(complex_mul(u, one).re(), WithinAbs(u.re(), 1e-12));
        CHECK_THAT(complex_mul(u, one).im(), WithinAbs(u.im(), 1e-12));

        const ComplexBallPoint sum = complex_add(u, complex_neg(u));
        CHECK_THAT(sum.re(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(sum.im(), WithinAbs(0.0, 1e-15));
    }
    CHECK_THROWS_AS(complex_mul_inverse(ComplexBallPoint(0.0, 0.0, kUnit)), InverseUndefined);
}

TEST_CASE("complex addition matches the two dimensional ball", "[ball]") {
    Xoshiro256pp rng(61);
    for (int i = 0; i < 500; ++i) {
        const ComplexBallPoint u(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), kUnit);
        const ComplexBallPoint v(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), kUnit);
        const ComplexBallPoint w = complex_add(u, v);
        const BallVector bw =
            ball_add(BallVector({u.re(), u.im()}, kUnit), BallVector({v.re(), v.im()}, kUnit));
        CHECK(w.re() == bw.components()[0]);
        CHECK(w.im() == bw.components()[1]);
    }
}

TEST_CASE("ball domain violations are rejected", "[ball]") {
    CHECK_THROWS_AS(BallVector({1.0, 0.0}, kUnit), DomainViolation);
    CHECK_THROWS_AS(BallVector({0.8, 0.8}, kUnit), DomainViolation);
    CHECK_THROWS_AS(ComplexBallPoint(0.8, 0.8, kUnit), DomainViolation);
    CHECK_THROWS_AS(ball_add(BallVector({0.1}, kUnit), BallVector({0.1, 0.1}, kUnit)),
                    DimensionMismatch);
    CHECK_THROWS_AS(ball_add(BallVector({0.1}, kUnit), BallVector({0.1}, Params(2.0))),
                    ParamsMismatch);
}
