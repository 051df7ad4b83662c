#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ball.hpp"
#include "gyro.hpp"
#include "meanlike.hpp"
#include "multidim.hpp"
#include "params.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "scalar.hpp"

namespace hypervel {

/// Configuration of one verification run. Law thresholds are fixed per
/// law (they encode each law's accuracy contract); tol is echoed into the
/// report header for reproducibility.
struct VerifyConfig {
    double c = 1.0;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    long long samples = 10000;
};

namespace detail {

struct LawResult {
    long long samples_run = 0;
    double max_residual = 0.0;
    std::string worst; // operands of the max-residual sample, as JSON
    bool violated = false;
};

/// Records one sample. The worst (largest-residual) operand tuple is kept
/// so that a violated law always reports the strongest counterexample.
template <class RenderFn>
void record(LawResult& r, double residual, bool violates, RenderFn&& render) {
    ++r.samples_run;
    if (r.samples_run == 1 || residual > r.max_residual) {
        r.max_residual = residual;
        r.worst = render();
    }
    if (violates) r.violated = true;
}

inline long long per_bucket(long long samples, long long buckets) {
    return samples / buckets > 0 ? samples / buckets : 1;
}

inline std::string render_scalars(std::initializer_list<double> vs) {
    return json_number_array(std::vector<double>(vs));
}

inline std::string render_vectors(const std::vector<std::vector<double>>& vs) {
    std::vector<std::string> parts;
    parts.reserve(vs.size());
    for (const auto& v : vs) parts.push_back(json_number_array(v));
    return json_value_array(parts);
}

inline double max_component_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline double norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace detail

/// One named property law: a sampling loop that accumulates residuals and
/// flags violations. Laws marked expect_violation document non-laws; for
/// them a found violation is the desired outcome.
struct Law {
    std::string name;
    std::string module;
    bool expect_violation = false;
    std::function<void(const VerifyConfig&, Xoshiro256pp&, detail::LawResult&)> run;
};

// ---------------------------------------------------------------------------
// scalar suite
// ---------------------------------------------------------------------------

inline std::vector<Law> scalar_suite() {
    std::vector<Law> laws;

    // Draw from (-c, c] with deliberate mass on and just inside the boundary.
    auto draw_closure = [](Xoshiro256pp& rng, double c) {
        const double r = rng.uniform01();
        if (r < 0.05) return c;
        if (r < 0.10) return std::nextafter(c, 0.0);
        if (r < 0.15) return std::nextafter(-c, 0.0);
        return rng.uniform(-0.999999 * c, 0.999999 * c);
    };

    laws.push_back(Law{
        "scalar.closure", "scalar", false,
        [draw_closure](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double u = draw_closure(rng, cfg.c);
                const double v = draw_closure(rng, cfg.c);
                const EScalar w = e_add(EScalar(u, p), EScalar(v, p));
                const bool in_range = w.value() > -cfg.c && w.value() <= cfg.c;
                const bool boundary_ok = (w.value() == cfg.c) == (u == cfg.c || v == cfg.c);
                const bool bad = !in_range || !boundary_ok;
                detail::record(res, bad ? 1.0 : 0.0, bad,
                               [&] { return detail::render_scalars({u, v}); });
            }
        }});

    laws.push_back(Law{
        "scalar.associativity", "scalar", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const double u = rng.uniform(-0.99 * cfg.c, 0.99 * cfg.c);
                const double v = rng.uniform(-0.99 * cfg.c, 0.99 * cfg.c);
                const double w = (i % 8 == 7) ? cfg.c : rng.uniform(-0.99 * cfg.c, 0.99 * cfg.c);
                const EScalar eu(u, p), ev(v, p), ew(w, p);
                const double lhs = e_add(e_add(eu, ev), ew).value();
                const double rhs = e_add(eu, e_add(ev, ew)).value();
                const double residual = std::abs(lhs - rhs);
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_scalars({u, v, w}); });
            }
        }});

    laws.push_back(Law{
        "scalar.commutativity", "scalar", false,
        [draw_closure](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double u = draw_closure(rng, cfg.c);
                const double v = draw_closure(rng, cfg.c);
                const EScalar eu(u, p), ev(v, p);
                const double residual = std::abs(e_add(eu, ev).value() - e_add(ev, eu).value());
                detail::record(res, residual, residual > 0.0,
                               [&] { return detail::render_scalars({u, v}); });
            }
        }});

    laws.push_back(Law{
        "scalar.inverse", "scalar", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double u = (i % 16 == 15) ? std::nextafter(cfg.c, 0.0)
                                                : rng.uniform(-0.999999 * cfg.c, 0.999999 * cfg.c);
                const EScalar eu(u, p);
                const double residual = std::abs(e_add(eu, e_neg(eu)).value());
                detail::record(res, residual, residual > 0.0,
                               [&] { return detail::render_scalars({u}); });
            }
        }});

    laws.push_back(Law{
        "scalar.distributivity", "scalar", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const double u = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const double v = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const double w = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const EScalar eu(u, p), ev(v, p), ew(w, p);
                const double lhs = e_mul(eu, e_add(ev, ew)).value();
                const double rhs = e_add(e_mul(eu, ev), e_mul(eu, ew)).value();
                const double residual = std::abs(lhs - rhs);
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_scalars({u, v, w}); });
            }
        }});

    laws.push_back(Law{
        "scalar.transport", "scalar", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const double x = rng.uniform(-5.0, 5.0);
                const double y = rng.uniform(-5.0, 5.0);
                const double lhs =
                    e_add(phi(ExtendedReal(x), p), phi(ExtendedReal(y), p)).value();
                const double rhs = phi(ExtendedReal(x + y), p).value();
                const double residual = std::abs(lhs - rhs);
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_scalars({x, y}); });
            }
        }});

    laws.push_back(Law{
        "scalar.newtonian_limit", "scalar", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            for (long long i = 0; i < cfg.samples; ++i) {
                const double u = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const double v = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const double scale = std::max(std::abs(u), std::abs(v));
                if (scale == 0.0) {
                    detail::record(res, 0.0, false,
                                   [&] { return detail::render_scalars({u, v}); });
                    continue;
                }
                const double big_c = 1e6 * scale;
                const double residual = std::abs(einstein_add(u, v, big_c) - (u + v));
                const double threshold = 1e-9 * (std::abs(u) + std::abs(v));
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_scalars({u, v}); });
            }
        }});

    return laws;
}

// ---------------------------------------------------------------------------
// ball suite
// ---------------------------------------------------------------------------

inline std::vector<Law> ball_suite() {
    std::vector<Law> laws;
    static const std::vector<std::size_t> kDims{1, 2, 3, 7};

    auto draw_ball = [](Xoshiro256pp& rng, std::size_t dim, double band) {
        return rng.vector_with_norm(dim, rng.uniform(0.0, band));
    };

    laws.push_back(Law{
        "ball.associativity", "ball", false,
        [draw_ball](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            const long long n = detail::per_bucket(cfg.samples, kDims.size());
            for (std::size_t dim : kDims) {
                for (long long i = 0; i < n; ++i) {
                    const auto u = draw_ball(rng, dim, 0.9 * cfg.c);
                    const auto v = draw_ball(rng, dim, 0.9 * cfg.c);
                    const auto w = draw_ball(rng, dim, 0.9 * cfg.c);
                    const BallVector bu(u, p), bv(v, p), bw(w, p);
                    const auto lhs = ball_add(ball_add(bu, bv), bw).components();
                    const auto rhs = ball_add(bu, ball_add(bv, bw)).components();
                    const double residual = detail::norm_diff(lhs, rhs);
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({u, v, w}); });
                }
            }
        }});

    laws.push_back(Law{
        "ball.commutativity", "ball", false,
        [draw_ball](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            const long long n = detail::per_bucket(cfg.samples, kDims.size());
            for (std::size_t dim : kDims) {
                for (long long i = 0; i < n; ++i) {
                    const auto u = draw_ball(rng, dim, 0.95 * cfg.c);
                    const auto v = draw_ball(rng, dim, 0.95 * cfg.c);
                    const BallVector bu(u, p), bv(v, p);
                    const double residual = detail::norm_diff(ball_add(bu, bv).components(),
                                                              ball_add(bv, bu).components());
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({u, v}); });
                }
            }
        }});

    laws.push_back(Law{
        "ball.identity", "ball", false,
        [draw_ball](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            const long long n = detail::per_bucket(cfg.samples, kDims.size());
            for (std::size_t dim : kDims) {
                const BallVector zero(std::vector<double>(dim, 0.0), p);
                for (long long i = 0; i < n; ++i) {
                    const auto u = draw_ball(rng, dim, 0.95 * cfg.c);
                    const BallVector bu(u, p);
                    const double residual =
                        std::max(detail::norm_diff(ball_add(bu, zero).components(), u),
                                 detail::norm_diff(ball_add(zero, bu).components(), u));
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({u}); });
                }
            }
        }});

    laws.push_back(Law{
        "ball.inverse", "ball", false,
        [draw_ball](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            const long long n = detail::per_bucket(cfg.samples, kDims.size());
            for (std::size_t dim : kDims) {
                for (long long i = 0; i < n; ++i) {
                    const auto u = draw_ball(rng, dim, 0.95 * cfg.c);
                    const BallVector bu(u, p);
                    const double residual =
                        EuclideanNorm::eval(ball_add(bu, ball_neg(bu)).components());
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({u}); });
                }
            }
        }});

    laws.push_back(Law{
        "ball.dim1_matches_scalar", "ball", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const double a = rng.uniform(-0.99 * cfg.c, 0.99 * cfg.c);
                const double b = rng.uniform(-0.99 * cfg.c, 0.99 * cfg.c);
                const BallVector ba({a}, p), bb({b}, p);
                const double lhs = ball_add(ba, bb).components()[0];
                const double rhs = einstein_add(a, b, cfg.c);
                const double residual = std::abs(lhs - rhs);
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_scalars({a, b}); });
            }
        }});

    laws.push_back(Law{
        "ball.collinear_norm", "ball", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            const long long n = detail::per_bucket(cfg.samples, kDims.size());
            for (std::size_t dim : kDims) {
                for (long long i = 0; i < n; ++i) {
                    const auto e = rng.unit_vector(dim);
                    const double r = rng.uniform(0.0, 0.9 * cfg.c);
                    const double s = rng.uniform(0.0, 0.9 * cfg.c);
                    std::vector<double> u(dim), v(dim);
                    for (std::size_t k = 0; k < dim; ++k) {
                        u[k] = r * e[k];
                        v[k] = s * e[k];
                    }
                    const BallVector bu(u, p), bv(v, p);
                    const double lhs = ball_add(bu, bv).norm();
                    const double rhs = einstein_add(r, s, cfg.c);
                    const double residual = std::abs(lhs - rhs);
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({u, v}); });
                }
            }
        }});

    auto draw_complex = [](Xoshiro256pp& rng, double c, double lo, double hi) {
        const double m = rng.uniform(lo, hi) * c;
        const double t = rng.uniform(0.0, 6.283185307179586);
        return std::pair<double, double>{m * std::cos(t), m * std::sin(t)};
    };

    laws.push_back(Law{
        "ball.complex_distributivity", "ball", false,
        [draw_complex](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const auto [ur, ui] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const auto [vr, vi] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const auto [wr, wi] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const ComplexBallPoint u(ur, ui, p), v(vr, vi, p), w(wr, wi, p);
                const ComplexBallPoint lhs = complex_mul(u, complex_add(v, w));
                const ComplexBallPoint rhs = complex_add(complex_mul(u, v), complex_mul(u, w));
                const double residual = std::hypot(lhs.re() - rhs.re(), lhs.im() - rhs.im());
                detail::record(res, residual, residual > threshold, [&] {
                    return detail::render_vectors({{ur, ui}, {vr, vi}, {wr, wi}});
                });
            }
        }});

    laws.push_back(Law{
        "ball.complex_mul_associativity", "ball", false,
        [draw_complex](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const auto [ur, ui] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const auto [vr, vi] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const auto [wr, wi] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const ComplexBallPoint u(ur, ui, p), v(vr, vi, p), w(wr, wi, p);
                const ComplexBallPoint lhs = complex_mul(complex_mul(u, v), w);
                const ComplexBallPoint rhs = complex_mul(u, complex_mul(v, w));
                const double residual = std::hypot(lhs.re() - rhs.re(), lhs.im() - rhs.im());
                detail::record(res, residual, residual > threshold, [&] {
                    return detail::render_vectors({{ur, ui}, {vr, vi}, {wr, wi}});
                });
            }
        }});

    laws.push_back(Law{
        "ball.complex_mul_commutativity", "ball", false,
        [draw_complex](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const auto [ur, ui] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const auto [vr, vi] = draw_complex(rng, cfg.c, 0.0, 0.9);
                const ComplexBallPoint u(ur, ui, p), v(vr, vi, p);
                const ComplexBallPoint lhs = complex_mul(u, v);
                const ComplexBallPoint rhs = complex_mul(v, u);
                const double residual = std::hypot(lhs.re() - rhs.re(), lhs.im() - rhs.im());
                detail::record(res, residual, residual > threshold, [&] {
                    return detail::render_vectors({{ur, ui}, {vr, vi}});
                });
            }
        }});

    laws.push_back(Law{
        "ball.polar_argument", "ball", false,
        [draw_complex](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12;
            const double two_pi = 6.283185307179586476925287;
            for (long long i = 0; i < cfg.samples; ++i) {
                const auto [ur, ui] = draw_complex(rng, cfg.c, 0.05, 0.9);
                const auto [vr, vi] = draw_complex(rng, cfg.c, 0.05, 0.9);
                const ComplexBallPoint u(ur, ui, p), v(vr, vi, p);
                const ComplexBallPoint w = complex_mul(u, v);
                const double expected = std::atan2(ui, ur) + std::atan2(vi, vr);
                double d = std::atan2(w.im(), w.re()) - expected;
                d -= two_pi * std::round(d / two_pi);
                const double residual = std::abs(d);
                detail::record(res, residual, residual > threshold, [&] {
                    return detail::render_vectors({{ur, ui}, {vr, vi}});
                });
            }
        }});

    return laws;
}

// ---------------------------------------------------------------------------
// gyro suite
// ---------------------------------------------------------------------------

inline std::vector<Law> gyro_suite() {
    std::vector<Law> laws;

    auto draw3 = [](Xoshiro256pp& rng, double band) {
        return rng.vector_with_norm(3, rng.uniform(0.0, band));
    };
    auto make = [](const std::vector<double>& v, const Params& p) {
        return GyroVector3(v[0], v[1], v[2], p);
    };

    laws.push_back(Law{
        "gyro.cross_inner_agreement", "gyro", false,
        [draw3, make](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const auto u = draw3(rng, 0.95 * cfg.c);
                const auto v = draw3(rng, 0.95 * cfg.c);
                const auto lhs = gyro_add_cross(make(u, p), make(v, p)).to_vector();
                const auto rhs = gyro_add_inner(make(u, p), make(v, p)).to_vector();
                const double residual = detail::norm_diff(lhs, rhs);
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_vectors({u, v}); });
            }
        }});

    // Documented non-law. A mutually orthogonal triple happens to
    // associate exactly (the gamma identity makes the scalings telescope),
    // so the built-in witness uses a non-orthogonal third velocity.
    laws.push_back(Law{
        "gyro.associativity", "gyro", true,
        [draw3, make](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double witness_gap = 1e-3 * cfg.c;
            const std::vector<std::vector<double>> canonical{
                {0.5 * cfg.c, 0.0, 0.0}, {0.0, 0.5 * cfg.c, 0.0}, {0.4 * cfg.c, 0.3 * cfg.c, 0.0}};
            for (long long i = 0; i < cfg.samples; ++i) {
                std::vector<double> u, v, w;
                if (i == 0) {
                    u = canonical[0];
                    v = canonical[1];
                    w = canonical[2];
                } else {
                    u = draw3(rng, 0.9 * cfg.c);
                    v = draw3(rng, 0.9 * cfg.c);
                    w = draw3(rng, 0.9 * cfg.c);
                }
                const GyroVector3 gu = make(u, p), gv = make(v, p), gw = make(w, p);
                const auto lhs = gyro_add_inner(gyro_add_inner(gu, gv), gw).to_vector();
                const auto rhs = gyro_add_inner(gu, gyro_add_inner(gv, gw)).to_vector();
                const double gap = detail::norm_diff(lhs, rhs);
                detail::record(res, gap, gap > witness_gap,
                               [&] { return detail::render_vectors({u, v, w}); });
            }
        }});

    // Documented non-law; the orthogonal pair at half the scale witnesses it.
    laws.push_back(Law{
        "gyro.commutativity", "gyro", true,
        [draw3, make](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double witness_gap = 1e-3 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                std::vector<double> u, v;
                if (i == 0) {
                    u = {0.5 * cfg.c, 0.0, 0.0};
                    v = {0.0, 0.5 * cfg.c, 0.0};
                } else {
                    u = draw3(rng, 0.9 * cfg.c);
                    v = draw3(rng, 0.9 * cfg.c);
                }
                const auto lhs = gyro_add_inner(make(u, p), make(v, p)).to_vector();
                const auto rhs = gyro_add_inner(make(v, p), make(u, p)).to_vector();
                const double gap = detail::norm_diff(lhs, rhs);
                detail::record(res, gap, gap > witness_gap,
                               [&] { return detail::render_vectors({u, v}); });
            }
        }});

    laws.push_back(Law{
        "gyro.gamma_identity", "gyro", false,
        [draw3, make](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12;
            for (long long i = 0; i < cfg.samples; ++i) {
                const auto u = draw3(rng, 0.9 * cfg.c);
                const auto v = draw3(rng, 0.9 * cfg.c);
                const double residual = gamma_identity_residual(make(u, p), make(v, p));
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_vectors({u, v}); });
            }
        }});

    laws.push_back(Law{
        "gyro.closure", "gyro", false,
        [draw3, make](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double band = (i % 16 == 15) ? 0.9999 * cfg.c : 0.99 * cfg.c;
                const auto u = draw3(rng, band);
                const auto v = draw3(rng, band);
                bool bad = false;
                try {
                    const GyroVector3 w1 = gyro_add_inner(make(u, p), make(v, p));
                    const GyroVector3 w2 = gyro_add_cross(make(u, p), make(v, p));
                    bad = !(w1.norm() < cfg.c) || !(w2.norm() < cfg.c);
                } catch (const Error&) {
                    bad = true;
                }
                detail::record(res, bad ? 1.0 : 0.0, bad,
                               [&] { return detail::render_vectors({u, v}); });
            }
        }});

    laws.push_back(Law{
        "gyro.parallel_reduction", "gyro", false,
        [make](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params p(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const auto e = rng.unit_vector(3);
                const double r = rng.uniform(0.0, 0.9 * cfg.c);
                const double s = rng.uniform(0.0, 0.9 * cfg.c);
                std::vector<double> u(3), v(3), expected(3);
                const double sum = einstein_add(r, s, cfg.c);
                for (std::size_t k = 0; k < 3; ++k) {
                    u[k] = r * e[k];
                    v[k] = s * e[k];
                    expected[k] = sum * e[k];
                }
                const auto w = gyro_add_inner(make(u, p), make(v, p)).to_vector();
                const double residual = detail::norm_diff(w, expected);
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_vectors({u, v}); });
            }
        }});

    // The Moebius maps live on the unit ball; this law is independent of c.
    laws.push_back(Law{
        "gyro.moebius_involution", "gyro", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-10;
            static const std::vector<std::size_t> dims{2, 3};
            const long long n = detail::per_bucket(cfg.samples, dims.size());
            for (std::size_t dim : dims) {
                for (long long i = 0; i < n; ++i) {
                    const auto w = rng.vector_with_norm(dim, rng.uniform(0.0, 0.9));
                    const auto z = rng.vector_with_norm(dim, rng.uniform(0.0, 0.9));
                    const UnitBallVector uw(w), uz(z);
                    const UnitBallVector once = moebius_involution(uw, uz);
                    const UnitBallVector twice = moebius_involution(uw, once);
                    const double residual = detail::norm_diff(twice.components(), z);
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({w, z}); });
                }
            }
        }});

    return laws;
}

// ---------------------------------------------------------------------------
// multidim suite (carriers are defined at scale 1)
// ---------------------------------------------------------------------------

inline std::vector<Law> multidim_suite() {
    std::vector<Law> laws;
    static const std::vector<std::size_t> kChainDims{1, 2, 3, 5};
    static const std::vector<std::size_t> kHDims{2, 3, 5};

    auto draw_signed = [](Xoshiro256pp& rng, double lo, double hi) {
        const double m = rng.uniform(lo, hi);
        return rng.uniform01() < 0.5 ? -m : m;
    };

    laws.push_back(Law{
        "multidim.chain_round_trip_identity", "multidim", false,
        [draw_signed](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-12;
            const long long n = detail::per_bucket(cfg.samples, kChainDims.size());
            for (std::size_t dim : kChainDims) {
                const auto links = identity_family(dim);
                for (long long i = 0; i < n; ++i) {
                    std::vector<double> x(dim);
                    for (auto& v : x) v = draw_signed(rng, 0.1, 10.0);
                    const auto back = chain_inverse(chain_forward(x, links), links);
                    const double residual = detail::max_component_diff(back, x);
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({x}); });
                }
            }
        }});

    laws.push_back(Law{
        "multidim.chain_round_trip_tanh", "multidim", false,
        [draw_signed](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-12;
            const long long n = detail::per_bucket(cfg.samples, kChainDims.size());
            for (std::size_t dim : kChainDims) {
                const auto links = tanh_family(dim);
                for (long long i = 0; i < n; ++i) {
                    std::vector<double> x(dim);
                    for (auto& v : x) v = draw_signed(rng, 0.1, 1.8);
                    const auto back = chain_inverse(chain_forward(x, links), links);
                    const double residual = detail::max_component_diff(back, x);
                    detail::record(res, residual, residual > threshold,
                                   [&] { return detail::render_vectors({x}); });
                }
            }
        }});

    auto draw_hpoint = [](Xoshiro256pp& rng, std::size_t dim) {
        std::vector<double> y(dim);
        for (auto& v : y) v = rng.uniform(0.1, 0.9);
        return HPoint(std::move(y));
    };

    laws.push_back(Law{
        "multidim.h_add_transport", "multidim", false,
        [draw_hpoint](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            const long long n = detail::per_bucket(cfg.samples, kHDims.size());
            for (std::size_t dim : kHDims) {
                for (long long i = 0; i < n; ++i) {
                    const HPoint x = draw_hpoint(rng, dim);
                    const HPoint y = draw_hpoint(rng, dim);
                    const auto direct = h_add(x, y).coords();
                    const auto dx = tanh_map_inverse(x).coords();
                    const auto dy = tanh_map_inverse(y).coords();
                    std::vector<double> sum(dim);
                    for (std::size_t k = 0; k < dim; ++k) sum[k] = dx[k] + dy[k];
                    const auto transported = tanh_map_forward(DPoint(sum)).coords();
                    const double residual = detail::max_component_diff(direct, transported);
                    detail::record(res, residual, residual > threshold, [&] {
                        return detail::render_vectors({x.coords(), y.coords()});
                    });
                }
            }
        }});

    laws.push_back(Law{
        "multidim.h_add_associativity", "multidim", false,
        [draw_hpoint](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            const long long n = detail::per_bucket(cfg.samples, kHDims.size());
            for (std::size_t dim : kHDims) {
                for (long long i = 0; i < n; ++i) {
                    const HPoint x = draw_hpoint(rng, dim);
                    const HPoint y = draw_hpoint(rng, dim);
                    const HPoint z = draw_hpoint(rng, dim);
                    const auto lhs = h_add(h_add(x, y), z).coords();
                    const auto rhs = h_add(x, h_add(y, z)).coords();
                    const double residual = detail::max_component_diff(lhs, rhs);
                    detail::record(res, residual, residual > threshold, [&] {
                        return detail::render_vectors({x.coords(), y.coords(), z.coords()});
                    });
                }
            }
        }});

    laws.push_back(Law{
        "multidim.h_add_commutativity", "multidim", false,
        [draw_hpoint](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            const long long n = detail::per_bucket(cfg.samples, kHDims.size());
            for (std::size_t dim : kHDims) {
                for (long long i = 0; i < n; ++i) {
                    const HPoint x = draw_hpoint(rng, dim);
                    const HPoint y = draw_hpoint(rng, dim);
                    const double residual =
                        detail::max_component_diff(h_add(x, y).coords(), h_add(y, x).coords());
                    detail::record(res, residual, residual > threshold, [&] {
                        return detail::render_vectors({x.coords(), y.coords()});
                    });
                }
            }
        }});

    // The origin is an exact identity on the trailing-zero piece of H_n
    // (the collapse rule keeps general points out of scope here).
    laws.push_back(Law{
        "multidim.h_add_identity", "multidim", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const long long n = detail::per_bucket(cfg.samples, kHDims.size());
            for (std::size_t dim : kHDims) {
                const HPoint zero(std::vector<double>(dim, 0.0));
                for (long long i = 0; i < n; ++i) {
                    std::vector<double> coords(dim, 0.0);
                    coords[0] = rng.uniform(0.0, 0.9);
                    const HPoint x(coords);
                    const double residual =
                        std::max(detail::max_component_diff(h_add(x, zero).coords(), coords),
                                 detail::max_component_diff(h_add(zero, x).coords(), coords));
                    detail::record(res, residual, residual > 0.0,
                                   [&] { return detail::render_vectors({coords}); });
                }
            }
        }});

    laws.push_back(Law{
        "multidim.cone_closure", "multidim", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            for (long long i = 0; i < cfg.samples; ++i) {
                double pa = 0.0, pb = 0.0, qa = 0.0, qb = 0.0;
                if (i % 16 != 15) {
                    pa = rng.uniform(0.01, 10.0);
                    pb = rng.uniform(-0.95, 0.95) * pa;
                }
                if (i % 32 != 31) {
                    qa = rng.uniform(0.01, 10.0);
                    qb = rng.uniform(-0.95, 0.95) * qa;
                }
                bool bad = false;
                try {
                    const ConePoint r = hyperbolic_mul(ConePoint(pa, pb), ConePoint(qa, qb));
                    const bool expect_origin =
                        (pa == 0.0 && pb == 0.0) || (qa == 0.0 && qb == 0.0);
                    bad = r.is_origin() != expect_origin;
                } catch (const Error&) {
                    bad = true;
                }
                detail::record(res, bad ? 1.0 : 0.0, bad, [&] {
                    return detail::render_vectors({{pa, pb}, {qa, qb}});
                });
            }
        }});

    auto draw_h2 = [](Xoshiro256pp& rng, double lo1, double hi1, double band2) {
        const double y1 = rng.uniform(lo1, hi1);
        const double y2 = rng.uniform(-band2, band2);
        return H2Point(y1, y2);
    };

    laws.push_back(Law{
        "multidim.h2_distributivity", "multidim", false,
        [draw_h2](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            for (long long i = 0; i < cfg.samples; ++i) {
                const H2Point x = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point y = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point z = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point lhs = h2_mul(x, h2_add(y, z));
                const H2Point rhs = h2_add(h2_mul(x, y), h2_mul(x, z));
                const double residual = std::max(std::abs(lhs.y1() - rhs.y1()),
                                                 std::abs(lhs.y2() - rhs.y2()));
                detail::record(res, residual, residual > threshold, [&] {
                    return detail::render_vectors(
                        {{x.y1(), x.y2()}, {y.y1(), y.y2()}, {z.y1(), z.y2()}});
                });
            }
        }});

    laws.push_back(Law{
        "multidim.h2_add_identity", "multidim", false,
        [draw_h2](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            const H2Point zero(0.0, 0.0);
            for (long long i = 0; i < cfg.samples; ++i) {
                const H2Point x = draw_h2(rng, 0.05, 0.95, 0.95);
                const H2Point l = h2_add(x, zero);
                const H2Point r = h2_add(zero, x);
                const double residual =
                    std::max(std::max(std::abs(l.y1() - x.y1()), std::abs(l.y2() - x.y2())),
                             std::max(std::abs(r.y1() - x.y1()), std::abs(r.y2() - x.y2())));
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_vectors({{x.y1(), x.y2()}}); });
            }
        }});

    laws.push_back(Law{
        "multidim.h2_mul_inverse", "multidim", false,
        [draw_h2](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            const H2Point one = h2_mul_identity();
            for (long long i = 0; i < cfg.samples; ++i) {
                const H2Point x = draw_h2(rng, 0.2, 0.9, 0.5);
                const H2Point prod = h2_mul(x, h2_mul_inverse(x));
                const double residual = std::max(std::abs(prod.y1() - one.y1()),
                                                 std::abs(prod.y2() - one.y2()));
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_vectors({{x.y1(), x.y2()}}); });
            }
        }});

    laws.push_back(Law{
        "multidim.h2_mul_commutativity", "multidim", false,
        [draw_h2](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            for (long long i = 0; i < cfg.samples; ++i) {
                const H2Point x = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point y = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point lhs = h2_mul(x, y);
                const H2Point rhs = h2_mul(y, x);
                const double residual = std::max(std::abs(lhs.y1() - rhs.y1()),
                                                 std::abs(lhs.y2() - rhs.y2()));
                detail::record(res, residual, residual > threshold, [&] {
                    return detail::render_vectors({{x.y1(), x.y2()}, {y.y1(), y.y2()}});
                });
            }
        }});

    laws.push_back(Law{
        "multidim.h2_mul_associativity", "multidim", false,
        [draw_h2](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9;
            for (long long i = 0; i < cfg.samples; ++i) {
                const H2Point x = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point y = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point z = draw_h2(rng, 0.1, 0.9, 0.9);
                const H2Point lhs = h2_mul(h2_mul(x, y), z);
                const H2Point rhs = h2_mul(x, h2_mul(y, z));
                const double residual = std::max(std::abs(lhs.y1() - rhs.y1()),
                                                 std::abs(lhs.y2() - rhs.y2()));
                detail::record(res, residual, residual > threshold, [&] {
                    return detail::render_vectors(
                        {{x.y1(), x.y2()}, {y.y1(), y.y2()}, {z.y1(), z.y2()}});
                });
            }
        }});

    return laws;
}

// ---------------------------------------------------------------------------
// meanlike suite
// ---------------------------------------------------------------------------

inline std::vector<Law> meanlike_suite() {
    std::vector<Law> laws;

    // Weights are kept in [0.05c, 0.9c] so every combined weight clears the
    // 0.01c well-conditioning band the conditional associativity assumes.
    auto draw_weight = [](Xoshiro256pp& rng, double c) { return rng.uniform(0.05 * c, 0.9 * c); };
    auto draw_value = [](Xoshiro256pp& rng, double c) { return rng.uniform(-0.9 * c, 0.9 * c); };
    auto draw_value_nonzero = [](Xoshiro256pp& rng, double c) {
        const double m = rng.uniform(0.05 * c, 0.9 * c);
        return rng.uniform01() < 0.5 ? -m : m;
    };

    auto render_pairs = [](std::initializer_list<const MeanPair*> ps) {
        std::vector<std::vector<double>> rows;
        for (const MeanPair* p : ps) rows.push_back({p->a(), p->b()});
        return detail::render_vectors(rows);
    };

    using MeanOp = std::function<MeanPair(const MeanPair&, const MeanPair&)>;

    laws.push_back(Law{
        "meanlike.arithmetic_associativity", "meanlike", false,
        [draw_weight, draw_value, render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng,
                                                detail::LawResult& res) {
            const Params prm(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            for (long long i = 0; i < cfg.samples; ++i) {
                const MeanPair p(draw_weight(rng, cfg.c), draw_value(rng, cfg.c), prm);
                const MeanPair q(draw_weight(rng, cfg.c), draw_value(rng, cfg.c), prm);
                const MeanPair r(draw_weight(rng, cfg.c), draw_value(rng, cfg.c), prm);
                const MeanPair lhs = mean_add_arithmetic(mean_add_arithmetic(p, q), r);
                const MeanPair rhs = mean_add_arithmetic(p, mean_add_arithmetic(q, r));
                const double residual =
                    std::max(std::abs(lhs.a() - rhs.a()), std::abs(lhs.b() - rhs.b()));
                detail::record(res, residual, residual > threshold,
                               [&] { return render_pairs({&p, &q, &r}); });
            }
        }});

    // The weighted harmonic mean of mixed-sign values has a pole where the
    // reciprocal sum cancels; an intermediate result within one ulp of c
    // cannot carry its rapidity, so triples whose partial sums approach
    // the boundary are resampled (the pole itself is a discontinuity, not
    // an associativity failure).
    laws.push_back(Law{
        "meanlike.harmonic_associativity", "meanlike", false,
        [render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params prm(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            const double pole_band = 0.99 * cfg.c;
            auto dv = [&rng, &cfg] {
                const double m = rng.uniform(0.05 * cfg.c, 0.9 * cfg.c);
                return rng.uniform01() < 0.5 ? -m : m;
            };
            auto dw = [&rng, &cfg] { return rng.uniform(0.05 * cfg.c, 0.9 * cfg.c); };
            for (long long i = 0; i < cfg.samples; ++i) {
                for (int attempt = 0; attempt < 1000; ++attempt) {
                    const MeanPair p(dw(), dv(), prm);
                    const MeanPair q(dw(), dv(), prm);
                    const MeanPair r(dw(), dv(), prm);
                    const MeanPair pq = mean_add_harmonic(p, q);
                    const MeanPair qr = mean_add_harmonic(q, r);
                    const MeanPair lhs = mean_add_harmonic(pq, r);
                    const MeanPair rhs = mean_add_harmonic(p, qr);
                    const bool away_from_pole =
                        std::abs(pq.b()) <= pole_band && std::abs(qr.b()) <= pole_band &&
                        std::abs(lhs.b()) <= pole_band && std::abs(rhs.b()) <= pole_band;
                    if (!away_from_pole && attempt + 1 < 1000) continue;
                    const double residual =
                        std::max(std::abs(lhs.a() - rhs.a()), std::abs(lhs.b() - rhs.b()));
                    detail::record(res, residual, residual > threshold,
                                   [&] { return render_pairs({&p, &q, &r}); });
                    break;
                }
            }
        }});

    // The generic route materializes the inverse total weight and the
    // reshaped values as points of (-c, c), which costs exp(2/w) of the
    // working precision; weights and values are sampled on the band where
    // that loss stays far below the threshold.
    laws.push_back(Law{
        "meanlike.generic_associativity", "meanlike", false,
        [render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params prm(cfg.c);
            const double threshold = 1e-9 * cfg.c;
            const ScalarSystem ws = einstein_scalar_system(cfg.c);
            const ActionSystem systems[] = {arithmetic_action_system(cfg.c),
                                            harmonic_action_system(cfg.c)};
            for (long long i = 0; i < cfg.samples; ++i) {
                const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
                auto dv = [&] { return sign * rng.uniform(0.15 * cfg.c, 0.9 * cfg.c); };
                auto dw = [&] { return rng.uniform(0.1 * cfg.c, 0.9 * cfg.c); };
                const MeanPair p(dw(), dv(), prm);
                const MeanPair q(dw(), dv(), prm);
                const MeanPair r(dw(), dv(), prm);
                double residual = 0.0;
                for (const ActionSystem& as : systems) {
                    const MeanPair lhs = agg_add(agg_add(p, q, ws, as), r, ws, as);
                    const MeanPair rhs = agg_add(p, agg_add(q, r, ws, as), ws, as);
                    residual = std::max({residual, std::abs(lhs.a() - rhs.a()),
                                         std::abs(lhs.b() - rhs.b())});
                }
                detail::record(res, residual, residual > threshold,
                               [&] { return render_pairs({&p, &q, &r}); });
            }
        }});

    auto comm_law = [draw_weight, draw_value, draw_value_nonzero, render_pairs](
                        std::string name, MeanOp op, bool nonzero_values) {
        return Law{std::move(name), "meanlike", false,
                   [op = std::move(op), nonzero_values, draw_weight, draw_value,
                    draw_value_nonzero, render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng,
                                                      detail::LawResult& res) {
                       const Params prm(cfg.c);
                       const double threshold = 1e-12 * cfg.c;
                       for (long long i = 0; i < cfg.samples; ++i) {
                           const double b1 = nonzero_values ? draw_value_nonzero(rng, cfg.c)
                                                            : draw_value(rng, cfg.c);
                           const double b2 = nonzero_values ? draw_value_nonzero(rng, cfg.c)
                                                            : draw_value(rng, cfg.c);
                           const MeanPair p(draw_weight(rng, cfg.c), b1, prm);
                           const MeanPair q(draw_weight(rng, cfg.c), b2, prm);
                           const MeanPair lhs = op(p, q);
                           const MeanPair rhs = op(q, p);
                           const double residual = std::max(std::abs(lhs.a() - rhs.a()),
                                                            std::abs(lhs.b() - rhs.b()));
                           detail::record(res, residual, residual > threshold,
                                          [&] { return render_pairs({&p, &q}); });
                       }
                   }};
    };

    laws.push_back(comm_law("meanlike.arithmetic_commutativity",
                            [](const MeanPair& p, const MeanPair& q) {
                                return mean_add_arithmetic(p, q);
                            },
                            false));
    laws.push_back(comm_law("meanlike.harmonic_commutativity",
                            [](const MeanPair& p, const MeanPair& q) {
                                return mean_add_harmonic(p, q);
                            },
                            true));

    laws.push_back(Law{
        "meanlike.identity", "meanlike", false,
        [draw_weight, draw_value, render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng,
                                                detail::LawResult& res) {
            const Params prm(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            const MeanPair zero(0.0, 0.0, prm);
            const ScalarSystem ws = einstein_scalar_system(cfg.c);
            const ActionSystem as = arithmetic_action_system(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const MeanPair p(draw_weight(rng, cfg.c), draw_value(rng, cfg.c), prm);
                double residual = 0.0;
                auto note = [&](const MeanPair& got) {
                    residual = std::max({residual, std::abs(got.a() - p.a()),
                                         std::abs(got.b() - p.b())});
                };
                note(mean_add_arithmetic(p, zero));
                note(mean_add_arithmetic(zero, p));
                note(mean_add_harmonic(p, zero));
                note(mean_add_harmonic(zero, p));
                note(agg_add(p, zero, ws, as));
                note(agg_add(zero, p, ws, as));
                detail::record(res, residual, residual > threshold,
                               [&] { return render_pairs({&p}); });
            }
        }});

    laws.push_back(Law{
        "meanlike.closure", "meanlike", false,
        [render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params prm(cfg.c);
            const ScalarSystem ws = einstein_scalar_system(cfg.c);
            const ActionSystem arith = arithmetic_action_system(cfg.c);
            const ActionSystem harm = harmonic_action_system(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double a1 = (i % 8 == 7) ? 0.0 : rng.uniform(0.0, 0.999 * cfg.c);
                const double a2 = (i % 16 == 15) ? 0.0 : rng.uniform(0.0, 0.999 * cfg.c);
                const double b1 = (i % 8 == 3) ? 0.0 : rng.uniform(-0.999 * cfg.c, 0.999 * cfg.c);
                const double b2 = rng.uniform(-0.999 * cfg.c, 0.999 * cfg.c);
                const MeanPair p(a1, b1, prm);
                const MeanPair q(a2, b2, prm);
                bool bad = false;
                try {
                    (void)mean_add_arithmetic(p, q);
                    (void)mean_add_harmonic(p, q);
                    (void)agg_add(p, q, ws, arith);
                    (void)agg_add(p, q, ws, harm);
                } catch (const Error&) {
                    bad = true;
                }
                detail::record(res, bad ? 1.0 : 0.0, bad, [&] { return render_pairs({&p, &q}); });
            }
        }});

    laws.push_back(Law{
        "meanlike.first_coordinate", "meanlike", false,
        [render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params prm(cfg.c);
            const ScalarSystem ws = einstein_scalar_system(cfg.c);
            const ActionSystem as = arithmetic_action_system(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double a1 = (i % 8 == 7) ? 0.0 : rng.uniform(0.0, 0.99 * cfg.c);
                const double a2 = (i % 16 == 15) ? 0.0 : rng.uniform(0.0, 0.99 * cfg.c);
                const double b1 = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const double b2 = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const MeanPair p(a1, b1, prm);
                const MeanPair q(a2, b2, prm);
                const double expected = einstein_add(a1, a2, cfg.c);
                double residual = std::abs(mean_add_arithmetic(p, q).a() - expected);
                residual = std::max(residual, std::abs(mean_add_harmonic(p, q).a() - expected));
                residual = std::max(residual, std::abs(agg_add(p, q, ws, as).a() - expected));
                detail::record(res, residual, residual > 0.0,
                               [&] { return render_pairs({&p, &q}); });
            }
        }});

    laws.push_back(Law{
        "meanlike.action_axioms", "meanlike", false,
        [](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const double threshold = 1e-9 * cfg.c;
            const ScalarSystem ws = einstein_scalar_system(cfg.c);
            const ActionSystem as = arithmetic_action_system(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double u = rng.uniform(0.0, 0.9 * cfg.c);
                const double v = rng.uniform(0.0, 0.9 * cfg.c);
                const double x = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const double y = rng.uniform(-0.9 * cfg.c, 0.9 * cfg.c);
                const double distrib =
                    std::abs(as.act(u, as.add(x, y)) - as.add(as.act(u, x), as.act(u, y)));
                const double compose =
                    std::abs(as.act(u, as.act(v, x)) - as.act(ws.mul(u, v), x));
                const double residual = std::max(distrib, compose);
                detail::record(res, residual, residual > threshold,
                               [&] { return detail::render_scalars({u, v, x, y}); });
            }
        }});

    // Same conditioning bands as generic associativity: the comparison is
    // between the materialized generic route and the rapidity closed forms,
    // so it is only meaningful where the generic route keeps full precision.
    laws.push_back(Law{
        "meanlike.generic_equivalence", "meanlike", false,
        [render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng, detail::LawResult& res) {
            const Params prm(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            const ScalarSystem ws = einstein_scalar_system(cfg.c);
            const ActionSystem arith = arithmetic_action_system(cfg.c);
            const ActionSystem harm = harmonic_action_system(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
                auto dv = [&] { return sign * rng.uniform(0.15 * cfg.c, 0.9 * cfg.c); };
                auto dw = [&] { return rng.uniform(0.15 * cfg.c, 0.9 * cfg.c); };
                const MeanPair p(dw(), dv(), prm);
                const MeanPair q(dw(), dv(), prm);
                const MeanPair ga = agg_add(p, q, ws, arith);
                const MeanPair ca = mean_add_arithmetic(p, q);
                const MeanPair gh = agg_add(p, q, ws, harm);
                const MeanPair ch = mean_add_harmonic(p, q);
                const double residual =
                    std::max({std::abs(ga.a() - ca.a()), std::abs(ga.b() - ca.b()),
                              std::abs(gh.a() - ch.a()), std::abs(gh.b() - ch.b())});
                detail::record(res, residual, residual > threshold,
                               [&] { return render_pairs({&p, &q}); });
            }
        }});

    laws.push_back(Law{
        "meanlike.fixed_point", "meanlike", false,
        [draw_value_nonzero, render_pairs](const VerifyConfig& cfg, Xoshiro256pp& rng,
                                           detail::LawResult& res) {
            const Params prm(cfg.c);
            const double threshold = 1e-12 * cfg.c;
            const ScalarSystem ws = einstein_scalar_system(cfg.c);
            const ActionSystem as = arithmetic_action_system(cfg.c);
            for (long long i = 0; i < cfg.samples; ++i) {
                const double b = draw_value_nonzero(rng, cfg.c);
                const MeanPair p(rng.uniform(0.1 * cfg.c, 0.9 * cfg.c), b, prm);
                const MeanPair q(rng.uniform(0.1 * cfg.c, 0.9 * cfg.c), b, prm);
                double residual = std::abs(mean_add_arithmetic(p, q).b() - b);
                residual = std::max(residual, std::abs(mean_add_harmonic(p, q).b() - b));
                residual = std::max(residual, std::abs(agg_add(p, q, ws, as).b() - b));
                detail::record(res, residual, residual > threshold,
                               [&] { return render_pairs({&p, &q}); });
            }
        }});

    return laws;
}

// ---------------------------------------------------------------------------
// suite driver
// ---------------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
    return {"scalar", "ball", "gyro", "multidim", "meanlike"};
}

inline std::vector<Law> suite_laws(const std::string& name) {
    if (name == "scalar") return scalar_suite();
    if (name == "ball") return ball_suite();
    if (name == "gyro") return gyro_suite();
    if (name == "multidim") return multidim_suite();
    if (name == "meanlike") return meanlike_suite();
    if (name == "all") {
        std::vector<Law> all;
        for (const auto& n : suite_names()) {
            auto part = suite_laws(n);
            for (auto& law : part) all.push_back(std::move(law));
        }
        return all;
    }
    throw DomainViolation("unknown suite '" + name + "'");
}

/// Result of a full suite run: the reports plus the process exit code the
/// CLI should use. 0 = every law behaved as documented, 1 = a claimed law
/// was violated, 3 = a documented non-law failed to produce a witness
/// (1 takes priority over 3 when both occur).
struct SuiteRun {
    RunHeader header;
    std::vector<PropertyReport> reports;
    int exit_code = 0;
};

inline PropertyReport run_law(const Law& law, const VerifyConfig& cfg) {
    Xoshiro256pp rng = law_stream(cfg.seed, law.name);
    detail::LawResult res;
    try {
        law.run(cfg, rng, res);
    } catch (const std::exception& e) {
        res.violated = true;
        res.max_residual = std::max(res.max_residual, 0.0);
        res.worst = "{\"error\":\"" + json_escape(e.what()) + "\"}";
    }
    PropertyReport rep;
    rep.law = law.name;
    rep.module = law.module;
    rep.samples_run = res.samples_run;
    rep.max_residual = std::max(res.max_residual, 0.0);
    if (res.violated) {
        rep.verdict =
            law.expect_violation ? Verdict::violated_as_expected : Verdict::violated_unexpectedly;
        rep.counterexample = res.worst;
    } else {
        rep.verdict = Verdict::holds;
    }
    return rep;
}

inline SuiteRun run_suite(const std::string& name, const VerifyConfig& cfg) {
    const std::vector<Law> laws = suite_laws(name);
    SuiteRun out;
    out.header = RunHeader{name, cfg.seed, cfg.samples, cfg.c, cfg.tol};
    bool unexpected = false;
    bool missing_witness = false;
    for (const auto& law : laws) {
        PropertyReport rep = run_law(law, cfg);
        if (rep.verdict == Verdict::violated_unexpectedly) unexpected = true;
        if (law.expect_violation && rep.verdict == Verdict::holds) missing_witness = true;
        out.reports.push_back(std::move(rep));
    }
    out.exit_code = unexpected ? 1 : (missing_witness ? 3 : 0);
    return out;
}

} // namespace hypervel
