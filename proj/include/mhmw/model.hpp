#pragma once

// Physical inputs and derived quantities for a neutral electric-dipole
// particle outside a magnetically charged cylinder with a cavity of
// radius r0 (natural units, hbar = c = 1). Conventions:
//   varpi = d*rho_m/m          effective cyclotron-like frequency
//   y0    = m*varpi*r0^2/2     dimensionless wall coordinate
//   Phi   = 2*pi*y0*s          missing geometric phase (radians)
// Dimensionless phases are passed around as phi_over_2pi; the identity
// Phi = 2*pi*y0*s then holds bit-exactly.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "mhmw/errors.hpp"

namespace mhmw {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Eigenvalue of sigma^3.
enum class Spin : int { up = +1, down = -1 };

inline constexpr int spin_sign(Spin s) { return static_cast<int>(s); }
inline constexpr double spin_value(Spin s) { return static_cast<double>(static_cast<int>(s)); }

inline Spin spin_from_int(int v) {
    if (v == 1) return Spin::up;
    if (v == -1) return Spin::down;
    throw domain_error("spin must be +1 or -1, got " + std::to_string(v));
}

struct SystemParams {
    double m = 1.0;     // mass
    double d = 1.0;     // electric dipole moment magnitude
    double rho_m = 1.0; // uniform volume magnetic charge density
    double r0 = 1.0;    // cavity (inner) radius
    std::optional<double> R; // ring radius, only for ring problems

    static SystemParams checked(double m, double d, double rho_m, double r0,
                                std::optional<double> R = std::nullopt) {
        if (!(m > 0.0)) throw domain_error("SystemParams: m must be > 0");
        if (!(d > 0.0)) throw domain_error("SystemParams: d must be > 0");
        if (!(rho_m > 0.0)) throw domain_error("SystemParams: rho_m must be > 0");
        if (!(r0 > 0.0)) throw domain_error("SystemParams: r0 must be > 0");
        if (R && !(*R >= r0)) throw domain_error("SystemParams: ring radius requires R >= r0");
        return {m, d, rho_m, r0, R};
    }

    void validate() const { (void)checked(m, d, rho_m, r0, R); }
};

struct DerivedParams {
    double varpi = 0.0;        // d*rho_m/m
    double phi_mhmw = 0.0;     // 2*pi*y0*s, radians
    double phi_over_2pi = 0.0; // y0*s, exact
    double y0 = 0.0;           // m*varpi*r0^2/2
};

// One quantum level label. Ring states have no radial number n.
struct QuantumState {
    std::optional<int> n; // radial quantum number, >= 0 when present
    int l = 0;            // angular quantum number
    Spin s = Spin::up;

    friend bool operator==(const QuantumState&, const QuantumState&) = default;
    // Ascending summation order: s, then l, then n.
    friend bool operator<(const QuantumState& a, const QuantumState& b) {
        if (spin_sign(a.s) != spin_sign(b.s)) return spin_sign(a.s) < spin_sign(b.s);
        if (a.l != b.l) return a.l < b.l;
        return a.n.value_or(-1) < b.n.value_or(-1);
    }
};

inline std::string to_string(const QuantumState& st) {
    std::string out;
    if (st.n) out += std::to_string(*st.n) + ":";
    out += std::to_string(st.l) + ":";
    out += (st.s == Spin::up ? "+1" : "-1");
    return out;
}

inline DerivedParams derive(const SystemParams& p, Spin s) {
    p.validate();
    const double varpi = p.d * p.rho_m / p.m;
    const double y0 = 0.5 * p.m * varpi * p.r0 * p.r0;
    const double t = y0 * spin_value(s);
    return {varpi, two_pi * t, t, y0};
}

// Radial magnetic field outside the cavity wall, r >= r0:
//   B_r(r) = rho_m*r/2 - rho_m*r0^2/(2r).
inline double magnetic_field_radial(const SystemParams& p, double r) {
    p.validate();
    if (!(r >= p.r0)) {
        throw domain_error("magnetic_field_radial: formula valid only for r >= r0");
    }
    return 0.5 * p.rho_m * r - 0.5 * p.rho_m * p.r0 * p.r0 / r;
}

// Azimuthal components of the two effective vector-potential pieces.
inline double vector_potential_uniform(const SystemParams& p, Spin s, double r) {
    return 0.5 * p.d * p.rho_m * r * spin_value(s);
}
inline double vector_potential_cavity(const SystemParams& p, Spin s, double r) {
    return 0.5 * p.d * p.rho_m * p.r0 * p.r0 / r * spin_value(s);
}

// Loop integral of the cavity piece around a circle of radius
// loop_radius >= r0, by adaptive composite Simpson refinement to 1e-12
// relative. Equals pi*d*rho_m*r0^2*s independent of the loop radius.
inline double missing_phase_by_quadrature(const SystemParams& p, Spin s, double loop_radius) {
    p.validate();
    if (!(loop_radius >= p.r0)) {
        throw domain_error("missing_phase_by_quadrature: loop_radius must be >= r0");
    }
    const auto f = [&](double phi_coord) {
        (void)phi_coord; // azimuthally symmetric integrand
        return vector_potential_cavity(p, s, loop_radius) * loop_radius;
    };
    auto simpson = [&](int n) {
        const double h = two_pi / n;
        double acc = f(0.0) + f(two_pi);
        for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
        return acc * h / 3.0;
    };
    double prev = simpson(8);
    for (int n = 16; n <= 4096; n *= 2) {
        const double cur = simpson(n);
        if (std::fabs(cur - prev) <= 1e-13 * std::fabs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

// z-component of curl(A_uniform): the effective uniform field d*rho_m*s.
inline double effective_uniform_field(const SystemParams& p, Spin s) {
    p.validate();
    return p.d * p.rho_m * spin_value(s);
}

// gamma = l + (1-s)/2 - Phi/(2*pi).
inline double gamma_param(int l, Spin s, double phi_over_2pi) {
    return static_cast<double>(l) + (s == Spin::down ? 1.0 : 0.0) - phi_over_2pi;
}

// Inclusive integer range for spectrum requests.
struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct NuBeta {
    double nu = 0.0;
    double beta = 0.0;
};

// Ring equation parameters:
//   nu   = Phi/(2*pi) + s/2 - (s/2)*m*varpi*R^2
//   beta = 2*m*R^2*E - nu^2 + m*varpi*R^2.
inline NuBeta nu_beta_params(Spin s, double phi_over_2pi, double m, double varpi, double R,
                             double E) {
    if (!(R > 0.0)) throw domain_error("nu_beta_params: requires R > 0");
    const double sv = spin_value(s);
    const double mwR2 = m * varpi * R * R;
    const double nu = phi_over_2pi + 0.5 * sv - 0.5 * sv * mwR2;
    const double beta = 2.0 * m * R * R * E - nu * nu + mwR2;
    return {nu, beta};
}

} // namespace mhmw
