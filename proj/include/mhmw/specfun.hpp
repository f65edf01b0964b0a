#pragma once

// Special functions the spectra depend on: sign-carrying log-Gamma,
// Kummer's M (confluent hypergeometric, first kind), Tricomi's U
// (second kind) and the small-argument leading form of U.
//
// All series accumulate in long double with term-ratio stopping at
// relative 1e-16 and a hard cap of 10000 terms. Every result carries an
// absolute error estimate derived from the accumulated |term| sum, so
// cancellation in the U connection formula is reported, not hidden.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "mhmw/errors.hpp"

namespace mhmw {

enum class SfMethod {
    series,
    connection_formula,
    asymptotic,
    polynomial_reduction,
};

inline const char* to_string(SfMethod m) {
    switch (m) {
        case SfMethod::series: return "series";
        case SfMethod::connection_formula: return "connection_formula";
        case SfMethod::asymptotic: return "asymptotic";
        case SfMethod::polynomial_reduction: return "polynomial_reduction";
    }
    return "?";
}

struct SpecFunResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    SfMethod method = SfMethod::series;
};

// ln|Gamma(x)| plus the sign of Gamma(x).
struct LogGamma {
    double log_abs = 0.0;
    int sign = 1;
};

namespace detail {

inline constexpr long double pi_ld = std::numbers::pi_v<long double>;
inline constexpr long double ln_two_pi_half_ld = 0.91893853320467274178032973640561764L; // ln(2*pi)/2

// sin(pi*x) with exact argument reduction (x - nearbyint(x) is exact).
inline long double sinpi_ld(long double x) {
    const long double k = std::nearbyint(x);
    const long double r = x - k;
    const long double s = std::sin(pi_ld * r);
    const bool k_odd = std::fmod(std::fabs(k), 2.0L) == 1.0L;
    return k_odd ? -s : s;
}

struct LnGammaLd {
    long double log_abs;
    int sign; // 0 marks a pole at a non-positive integer
};

// Stirling series with Bernoulli corrections for z >= 24, upward shift
// below, reflection for x < 1/2. Good to ~1e-18 relative in long double.
inline LnGammaLd ln_gamma_ld(long double x) {
    if (x <= 0.0L && x == std::nearbyint(x)) return {0.0L, 0};
    if (x < 0.5L) {
        const long double s = sinpi_ld(x);
        const LnGammaLd g = ln_gamma_ld(1.0L - x);
        return {std::log(pi_ld / std::fabs(s)) - g.log_abs, s > 0.0L ? 1 : -1};
    }
    long double shift = 0.0L;
    long double z = x;
    while (z < 24.0L) {
        shift += std::log(z);
        z += 1.0L;
    }
    const long double zi = 1.0L / z;
    const long double zi2 = zi * zi;
    // Bernoulli coefficients B_{2k}/(2k(2k-1)) for k = 1..8
    const long double corr =
        zi * (8.3333333333333333333333333333333333e-2L +
        zi2 * (-2.7777777777777777777777777777777778e-3L +
        zi2 * (7.9365079365079365079365079365079365e-4L +
        zi2 * (-5.9523809523809523809523809523809524e-4L +
        zi2 * (8.4175084175084175084175084175084175e-4L +
        zi2 * (-1.9175269175269175269175269175269175e-3L +
        zi2 * (6.4102564102564102564102564102564103e-3L +
        zi2 * (-2.9550653594771241830065359477124183e-2L))))))));
    const long double lg = (z - 0.5L) * std::log(z) - z + ln_two_pi_half_ld + corr;
    return {lg - shift, 1};
}

struct SeriesLd {
    long double value;
    long double abs_sum;
    long double tail_bound;
    int terms;
};

// Taylor series of M(a,b,y) = sum_k (a)_k/(b)_k y^k/k!, long double with
// compensated accumulation. Caller must reject b at non-positive integers.
inline SeriesLd kummer_series_ld(long double a, long double b, long double y) {
    long double term = 1.0L;
    long double sum = 1.0L;
    long double comp = 0.0L;
    long double abs_sum = 1.0L;
    const long double ay = std::fabs(y);
    for (int k = 0; k < 10000; ++k) {
        term *= (a + k) * y / ((b + k) * (k + 1));
        const long double yk = term - comp;
        const long double tk = sum + yk;
        comp = (tk - sum) - yk;
        sum = tk;
        abs_sum += std::fabs(term);
        if (term == 0.0L) return {sum, abs_sum, 0.0L, k + 2};
        if (k + 1 > ay + 10.0L) {
            // past the term-magnitude hump; ratio below ~0.9 from here on
            const long double ratio =
                std::fabs((a + k + 1) * y / ((b + k + 1) * (k + 2)));
            if (ratio < 0.9L) {
                const long double tail = std::fabs(term) * ratio / (1.0L - ratio);
                if (std::fabs(term) <= 1e-16L * std::fabs(sum) ||
                    std::fabs(term) <= 1e-19L * abs_sum) {
                    return {sum, abs_sum, tail, k + 2};
                }
            }
        }
    }
    throw numeric_error("kummer series: 10000-term cap hit (a=" + std::to_string((double)a) +
                        ", b=" + std::to_string((double)b) + ", y=" + std::to_string((double)y) + ")");
}

inline long double series_err_ld(const SeriesLd& s) {
    return s.abs_sum * 1.1e-19L * s.terms + s.tail_bound;
}

struct ULd {
    long double value;
    long double err;
    long double scale; // |term1| + |term2|, the natural size before cancellation
};

// Two-M connection formula; b must be away from integers.
inline ULd tricomi_conn_ld(long double a, long double b, long double y) {
    const long double ln_y = std::log(y);

    const LnGammaLd g_1mb = ln_gamma_ld(1.0L - b);
    const LnGammaLd g_ab1 = ln_gamma_ld(a - b + 1.0L);
    const LnGammaLd g_bm1 = ln_gamma_ld(b - 1.0L);
    const LnGammaLd g_a = ln_gamma_ld(a);

    long double t1 = 0.0L, e1 = 0.0L;
    if (g_ab1.sign != 0) {
        const SeriesLd m1 = kummer_series_ld(a, b, y);
        const long double lc = g_1mb.log_abs - g_ab1.log_abs;
        const long double c = g_1mb.sign * g_ab1.sign * std::exp(lc);
        t1 = c * m1.value;
        e1 = std::fabs(c) * series_err_ld(m1) +
             std::fabs(t1) * (2e-19L * (std::fabs(g_1mb.log_abs) + std::fabs(g_ab1.log_abs)) + 3e-19L);
    }

    long double t2 = 0.0L, e2 = 0.0L;
    if (g_a.sign != 0) {
        const SeriesLd m2 = kummer_series_ld(a - b + 1.0L, 2.0L - b, y);
        const long double lc = g_bm1.log_abs - g_a.log_abs + (1.0L - b) * ln_y;
        const long double c = g_bm1.sign * g_a.sign * std::exp(lc);
        t2 = c * m2.value;
        e2 = std::fabs(c) * series_err_ld(m2) +
             std::fabs(t2) * (2e-19L * (std::fabs(g_bm1.log_abs) + std::fabs(g_a.log_abs) +
                                        std::fabs((1.0L - b) * ln_y)) + 3e-19L);
    }

    const long double value = t1 + t2;
    const long double scale = std::fabs(t1) + std::fabs(t2);
    const long double err = e1 + e2 + scale * 2e-19L;
    return {value, err, scale};
}

inline double to_double_checked(long double v, const char* who) {
    if (std::fabs(v) > (long double)std::numeric_limits<double>::max()) {
        throw numeric_error(std::string(who) + ": result overflows double range");
    }
    return (double)v;
}

} // namespace detail

// ln|Gamma(x)| and sign of Gamma(x). Relative error <= 1e-13 on [-170, 170].
inline LogGamma ln_gamma(double x) {
    if (x <= 0.0 && x == std::nearbyint(x)) {
        throw domain_error("ln_gamma: pole at non-positive integer x=" + std::to_string(x));
    }
    const auto g = detail::ln_gamma_ld((long double)x);
    return {(double)g.log_abs, g.sign};
}

// Gamma(x) as sign * exp(ln|Gamma|), with overflow detection.
inline double gamma_fn(double x) {
    const LogGamma g = ln_gamma(x);
    if (g.log_abs > 709.0) {
        throw numeric_error("gamma_fn: overflow at x=" + std::to_string(x));
    }
    return g.sign * std::exp(g.log_abs);
}

// Kummer's M(a, b, y). Exact 1 at y = 0. The contract covers y >= 0
// (|a|,|b| <= 100, y <= 200); negative y is evaluated by the same series
// and the error estimate reflects the alternating-sum cancellation.
inline SpecFunResult kummer_m(double a, double b, double y) {
    if (b <= 0.0 && b == std::nearbyint(b)) {
        throw domain_error("kummer_m: parameter pole, b non-positive integer b=" + std::to_string(b));
    }
    if (y == 0.0) return {1.0, 0.0, SfMethod::series};
    const auto s = detail::kummer_series_ld((long double)a, (long double)b, (long double)y);
    const double value = detail::to_double_checked(s.value, "kummer_m");
    const double err = (double)detail::series_err_ld(s) + std::fabs(value) * 1.2e-16;
    return {value, err, SfMethod::series};
}

// Tricomi's U(a, b; y), y > 0. Non-positive integer a uses the
// terminating (generalized-Laguerre) reduction; b within 1e-6 of an
// integer is handled by averaging the connection formula at b -+ 1e-6.
//
// The error gate is relative to the natural scale |term1|+|term2| of the
// connection formula, so evaluations near zeros of U (root scans) never
// throw. Where U is exponentially smaller than that scale (a > 0 with
// large y), accuracy degrades and abs_error_estimate says by how much;
// the gate throws once the estimate exceeds 1e-9 of the scale.
inline SpecFunResult tricomi_u(double a, double b, double y) {
    if (!(y > 0.0)) {
        throw domain_error("tricomi_u: requires y > 0, got y=" + std::to_string(y));
    }

    if (a <= 0.0 && a == std::nearbyint(a)) {
        // U(-n, b, y) = (-1)^n (b)_n M(-n, b, y), a terminating series
        const long double n = -(long double)a;
        long double poch = 1.0L;
        for (long double j = 0.0L; j < n; j += 1.0L) {
            const long double f = (long double)b + j;
            if (f == 0.0L) {
                throw domain_error("tricomi_u: (b)_n factor vanishes in polynomial reduction");
            }
            poch *= f;
        }
        const auto s = detail::kummer_series_ld((long double)a, (long double)b, (long double)y);
        const long double sign = (std::fmod(n, 2.0L) == 0.0L) ? 1.0L : -1.0L;
        const long double v = sign * poch * s.value;
        const double value = detail::to_double_checked(v, "tricomi_u");
        const double err =
            (double)(std::fabs(poch) * detail::series_err_ld(s)) + std::fabs(value) * 1.2e-16;
        return {value, err, SfMethod::polynomial_reduction};
    }

    const double b_int = std::nearbyint(b);
    detail::ULd u;
    if (std::fabs(b - b_int) < 1e-6) {
        const long double eps = 1e-6L;
        const auto up = detail::tricomi_conn_ld((long double)a, (long double)b + eps, (long double)y);
        const auto dn = detail::tricomi_conn_ld((long double)a, (long double)b - eps, (long double)y);
        u.value = 0.5L * (up.value + dn.value);
        u.scale = 0.5L * (up.scale + dn.scale);
        // curvature of U in b across the averaged pair, plus component errors
        u.err = 0.5L * (up.err + dn.err) + 1e-5L * std::fabs(up.value - dn.value);
    } else {
        u = detail::tricomi_conn_ld((long double)a, (long double)b, (long double)y);
    }

    if (u.err > 1e-9L * (u.scale + std::fabs(u.value))) {
        throw numeric_error("tricomi_u: connection formula lost precision (a=" + std::to_string(a) +
                            ", b=" + std::to_string(b) + ", y=" + std::to_string(y) +
                            ", est=" + std::to_string((double)u.err) + ")");
    }
    const double value = detail::to_double_checked(u.value, "tricomi_u");
    const double err = (double)u.err + std::fabs(value) * 1.2e-16;
    return {value, err, SfMethod::connection_formula};
}

// Leading small-argument form of U for b > 1:
//   U(a, b; y0) ~ Gamma(b-1)/Gamma(a) * y0^(1-b).
// Returns exactly 0 at the poles of Gamma(a), which is the quantization
// signal a = -n.
inline double tricomi_u_small_y(double a, double b, double y0) {
    if (!(b > 1.0)) {
        throw domain_error("tricomi_u_small_y: requires b > 1 (logarithmic case excluded), b=" +
                           std::to_string(b));
    }
    if (!(y0 > 0.0)) {
        throw domain_error("tricomi_u_small_y: requires y0 > 0");
    }
    const auto gb = detail::ln_gamma_ld((long double)b - 1.0L);
    const auto ga = detail::ln_gamma_ld((long double)a);
    if (ga.sign == 0) return 0.0;
    const long double lv = gb.log_abs - ga.log_abs + (1.0L - (long double)b) * std::log((long double)y0);
    if (lv > 709.0L) {
        throw numeric_error("tricomi_u_small_y: overflow");
    }
    return (double)(gb.sign * ga.sign * std::exp(lv));
}

} // namespace mhmw
