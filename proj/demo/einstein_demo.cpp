/** @file
 *  @brief Tour of the library: scalars, balls, 3D composition, means.
 */
#include <cstdio>
#include <vector>

#include <hypervel/hypervel.hpp>

using namespace hypervel;

int main() {
    const Params p(1.0); // measure every velocity in units of c

    // Scalar composition never leaves (-c, c]; c itself absorbs.
    const EScalar u(0.5, p);
    const EScalar v(0.5, p);
    std::printf("0.5 (+) 0.5          = %s\n", format_double(e_add(u, v).value()).c_str());
    std::printf("0.5 (+) c            = %s (absorbing)\n",
                format_double(e_add(u, EScalar(1.0, p)).value()).c_str());

    // The transport phi carries ordinary addition to the interval.
    const EScalar img = phi(ExtendedReal(1.0), p);
    std::printf("phi(1)               = %s\n", format_double(img.value()).c_str());
    std::printf("phi_inv(phi(1))      = %s\n", format_double(phi_inv(img).value()).c_str());

    // Vector addition on the ball keeps the speed limit in any dimension.
    const BallVector a = ball_phi({0.3, 0.4, 0.0}, p);
    const BallVector b = ball_phi({0.0, 0.2, 0.6}, p);
    const BallVector s = ball_add(a, b);
    std::printf("|a|, |b|, |a (+) b|  = %s, %s, %s\n", format_double(a.norm()).c_str(),
                format_double(b.norm()).c_str(), format_double(s.norm()).c_str());

    // Relativistic 3D composition is neither commutative nor associative.
    const GyroVector3 x(0.5, 0.0, 0.0, p);
    const GyroVector3 y(0.0, 0.5, 0.0, p);
    const auto xy = gyro_add_inner(x, y).components();
    const auto yx = gyro_add_inner(y, x).components();
    std::printf("x (+) y              = [%s, %s, %s]\n", format_double(xy[0]).c_str(),
                format_double(xy[1]).c_str(), format_double(xy[2]).c_str());
    std::printf("y (+) x              = [%s, %s, %s]\n", format_double(yx[0]).c_str(),
                format_double(yx[1]).c_str(), format_double(yx[2]).c_str());

    // Weighted mean-like aggregation of (weight, value) pairs.
    const MeanPair m1(0.6, 0.2, p);
    const MeanPair m2(0.3, 0.7, p);
    const MeanPair ar = mean_add_arithmetic(m1, m2);
    const MeanPair ha = mean_add_harmonic(m1, m2);
    std::printf("arithmetic mean pair = (%s, %s)\n", format_double(ar.a()).c_str(),
                format_double(ar.b()).c_str());
    std::printf("harmonic mean pair   = (%s, %s)\n", format_double(ha.a()).c_str(),
                format_double(ha.b()).c_str());
    return 0;
}
