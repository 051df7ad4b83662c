/** @file
 *  @brief Independent reference implementations and frozen reference values.
 *
 *  The reference route evaluates every operation in rapidity coordinates at
 *  long double precision and never calls the code under test, so agreement
 *  is evidence rather than tautology. The frozen decimals were produced by
 *  a 40-digit arbitrary-precision evaluation of the same closed forms and
 *  are written with more digits than a double can hold; the compiler rounds
 *  them to the nearest representable value.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

/// Einstein addition through velocities directly, in long double.
inline long double e_add(long double u, long double v, long double c) {
    if (u == c || v == c) return c;
    return (u + v) / (1.0L + u * v / (c * c));
}

/// Einstein addition through rapidity space: atanh, add, tanh.
inline long double e_add_rapidity(long double u, long double v, long double c) {
    if (u == c || v == c) return c;
    return c * std::tanh(std::atanh(u / c) + std::atanh(v / c));
}

/// Baker product through rapidity space.
inline long double e_mul(long double u, long double v, long double c) {
    if (u == c || v == c) return c;
    return c * std::tanh(std::atanh(u / c) * std::atanh(v / c));
}

/// Vector tanh transport: map each operand to its rapidity vector, add
/// componentwise, map back. Valid in any dimension.
inline std::vector<long double> ball_add(const std::vector<long double>& u,
                                         const std::vector<long double>& v,
                                         long double c) {
    const std::size_t n = u.size();
    std::vector<long double> w(n, 0.0L);
    long double nu = 0.0L, nv = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    nu = std::sqrt(nu);
    nv = std::sqrt(nv);
    const long double ru = nu == 0.0L ? 0.0L : std::atanh(nu / c) / nu;
    const long double rv = nv == 0.0L ? 0.0L : std::atanh(nv / c) / nv;
    long double nw = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = ru * u[i] + rv * v[i];
        nw += w[i] * w[i];
    }
    nw = std::sqrt(nw);
    if (nw == 0.0L) return w;
    const long double scale = c * std::tanh(nw) / nw;
    for (auto& x : w) x *= scale;
    return w;
}

/// Relativistic velocity composition (inner-product form), long double.
inline std::vector<long double> gyro_add(const std::vector<long double>& u,
                                         const std::vector<long double>& v,
                                         long double c) {
    long double uu = 0.0L, uv = 0.0L;
    for (std::size_t i = 0; i < 3; ++i) {
        uu += u[i] * u[i];
        uv += u[i] * v[i];
    }
    const long double gu = 1.0L / std::sqrt(1.0L - uu / (c * c));
    const long double coef = (gu / (1.0L + gu)) * uv / (c * c);
    const long double denom = 1.0L + uv / (c * c);
    std::vector<long double> w(3, 0.0L);
    for (std::size_t i = 0; i < 3; ++i) {
        w[i] = (u[i] + v[i] / gu + coef * u[i]) / denom;
    }
    return w;
}

/// Weighted mean of the second coordinate in rapidity space; eta reshapes
/// the value rapidities (identity for the arithmetic mean, reciprocal for
/// the harmonic mean).
inline long double mean_second(long double a1, long double b1, long double a2, long double b2,
                               long double c, bool harmonic) {
    const long double w1 = std::atanh(a1 / c);
    const long double w2 = std::atanh(a2 / c);
    long double p1 = std::atanh(b1 / c);
    long double p2 = std::atanh(b2 / c);
    if (harmonic) {
        p1 = p1 == 0.0L ? 0.0L : 1.0L / p1;
        p2 = p2 == 0.0L ? 0.0L : 1.0L / p2;
    }
    long double m = (w1 * p1 + w2 * p2) / (w1 + w2);
    if (harmonic) m = m == 0.0L ? 0.0L : 1.0L / m;
    return c * std::tanh(m);
}

/// Frozen 40-digit reference values, rounded here to the nearest double.
namespace frozen {

// tanh(1); the Baker product identity at c = 1 and the first h2 identity
// coordinate.
inline constexpr double kTanh1 = 0.7615941559557648881195;

// 2 * tanh(1); the transport of rapidity 1 at scale c = 2.
inline constexpr double kPhiOneAtC2 = 1.523188311911529776239;

// atanh(0.8) and atanh(0.5).
inline constexpr double kAtanh08 = 1.098612288668109691395;
inline constexpr double kAtanh05 = 0.5493061443340548456976;

// Baker product of 0.5 with itself at c = 1: tanh(atanh(0.5)^2).
inline constexpr double kEMulHalfHalf = 0.2929016194099050891244;

// tanh(5), and the transport of the rapidity vector (3, 4) at c = 1:
// tanh(5) * (3/5, 4/5).
inline constexpr double kTanh5 = 0.999909204262595131211;
inline constexpr double kBallPhi34X = 0.5999455225575570787266;
inline constexpr double kBallPhi34Y = 0.7999273634100761049688;

// Einstein sums at c = 1: 0.25 (+) 0.25, 0.5 (+) 0.3, 0.6 (+) 0.3.
inline constexpr double kEAddQuarterQuarter = 0.4705882352941176470588;
inline constexpr double kEAddHalfPoint3 = 0.6956521739130434782609;
inline constexpr double kEAddPoint6Point3 = 0.7627118644067796610169;

// Second coordinates of the weighted means of (0.6, 0.2) and (0.3, 0.7).
inline constexpr double kMeanArithmeticSecond = 0.386673069750599090151;
inline constexpr double kMeanHarmonicSecond = 0.2594734988911664582704;

// y component of (0.5, 0, 0) (+) (0, 0.5, 0): 0.5 * sqrt(0.75).
inline constexpr double kGyroHalfHalfY = 0.4330127018922193233819;

// Norm gaps of the canonical gyro witnesses at c = 1: the bracketing gap
// of (0.5,0,0), (0,0.5,0), (0.4,0.3,0) and the ordering gap of
// (0.5,0,0), (0,0.5,0). Mutually orthogonal triples associate exactly,
// so the associativity witness needs a non-orthogonal third operand.
inline constexpr double kCanonicalAssocGap = 0.040412404566996138;
inline constexpr double kCanonicalCommGap = 0.094734345490753117;

// Second partial Einstein sum of (0.5, 0.5) with itself on H_2:
// (0.25 (+) 0.25) / (0.5 (+) 0.5).
inline constexpr double kHAddHalfSecond = 0.5882352941176470588235;

} // namespace frozen

/// First outputs of the seed expander, the generator, and the name hash,
/// frozen from an independent evaluation of the published algorithms.
namespace stream {

inline constexpr unsigned long long kSplitMix0[3] = {
    0xe220a8397b1dcdafULL, 0x6e789e6aa1b965f4ULL, 0x06c45d188009454fULL};
inline constexpr unsigned long long kSplitMix42[3] = {
    0xbdd732262feb6e95ULL, 0x28efe333b266f103ULL, 0x47526757130f9f52ULL};
inline constexpr unsigned long long kXoshiro42[4] = {
    0xd0764d4f4476689fULL, 0x519e4174576f3791ULL, 0xfbe07cfb0c24ed8cULL,
    0xb37d9f600cd835b8ULL};
inline constexpr unsigned long long kXoshiro0[4] = {
    0x53175d61490b23dfULL, 0x61da6f3dc380d507ULL, 0x5c0fdf91ec9a7bfcULL,
    0x02eebf8c3bbe5e1aULL};
inline constexpr double kUniform42[3] = {
    0.81430514512290986, 0.31882104006166112, 0.98389416817748876};
inline constexpr unsigned long long kFnvAbc = 0xe71fa2190541574bULL;
inline constexpr unsigned long long kFnvScalarAssoc = 0x7ffeea3a0a1357a7ULL;

} // namespace stream

} // namespace oracle
