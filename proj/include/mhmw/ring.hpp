#pragma once

// One-dimensional quantum ring of radius R: anti-periodic spinor
// boundary condition f(phi+2pi) = -f(phi), half-odd-integer labels
// j = l + 1/2, and the closed-form levels
//   E_l = (1/(2mR^2)) [l + (1-s)/2 - Phi/2pi + (s/2) m varpi R^2]^2 - varpi/2.
// The +- branch of the angular solution exp(i(nu +- sqrt(nu^2+beta))phi)
// is fixed by requiring the exponent to equal j.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mhmw/errors.hpp"
#include "mhmw/model.hpp"

namespace mhmw {

struct RingLevel {
    int l = 0;
    Spin s = Spin::up;
    double j = 0.0; // l + 1/2
    double energy = 0.0;
    double nu = 0.0;
    double beta = 0.0;
};

namespace detail {

inline double ring_bracket(int l, Spin s, double phi_over_2pi, double m, double varpi,
                           double R) {
    const double sv = spin_value(s);
    return static_cast<double>(l) + (s == Spin::down ? 1.0 : 0.0) - phi_over_2pi +
           0.5 * sv * (m * varpi * R * R);
}

} // namespace detail

inline RingLevel ring_energy(int l, Spin s, double m, double varpi, double R,
                             double phi_over_2pi) {
    if (!(m > 0.0)) throw domain_error("ring_energy: requires m > 0");
    if (!(varpi > 0.0)) throw domain_error("ring_energy: requires varpi > 0");
    if (!(R > 0.0)) throw domain_error("ring_energy: requires R > 0 (missing ring radius)");

    const double bracket = detail::ring_bracket(l, s, phi_over_2pi, m, varpi, R);
    const double E = bracket * bracket / (2.0 * m * R * R) - 0.5 * varpi;
    const NuBeta nb = nu_beta_params(s, phi_over_2pi, m, varpi, R, E);

    // dispersion checks against j = l + 1/2. The squared form avoids the
    // sqrt noise amplification near bracket-zero states; the branch
    // residual uses |bracket| = sqrt(nu^2+beta) in exact arithmetic.
    const double j = l + 0.5;
    const double disc = nb.nu * nb.nu + nb.beta;
    const double jmn2 = (j - nb.nu) * (j - nb.nu);
    const double scale = std::max({1.0, std::fabs(disc), jmn2});
    if (std::fabs(disc - jmn2) > 1e-12 * scale) {
        throw numeric_error("ring_energy: dispersion relation residual " +
                            std::to_string(std::fabs(disc - jmn2)) +
                            " exceeds tolerance at l=" + std::to_string(l));
    }
    const double root = std::fabs(bracket);
    const double res = std::min(std::fabs(nb.nu + root - j), std::fabs(nb.nu - root - j));
    if (res > 1e-12 * std::max(1.0, std::fabs(j))) {
        throw numeric_error("ring_energy: branch residual " + std::to_string(res) +
                            " exceeds tolerance at l=" + std::to_string(l));
    }

    RingLevel lv;
    lv.l = l;
    lv.s = s;
    lv.j = j;
    lv.energy = E;
    lv.nu = nb.nu;
    lv.beta = nb.beta;
    return lv;
}

inline RingLevel ring_energy(int l, Spin s, const SystemParams& p, double phi_over_2pi) {
    if (!p.R) throw domain_error("ring_energy: SystemParams has no ring radius R");
    p.validate();
    return ring_energy(l, s, p.m, p.d * p.rho_m / p.m, *p.R, phi_over_2pi);
}

// Unnormalized angular solution exp(i j phi_coord) with the branch
// validated against nu +- sqrt(nu^2+beta). Anti-periodic:
// value(phi+2pi) = -value(phi).
inline std::complex<double> angular_wavefunction(double phi_coord, int l, Spin s, double m,
                                                 double varpi, double R, double phi_over_2pi) {
    const RingLevel lv = ring_energy(l, s, m, varpi, R, phi_over_2pi);
    return std::polar(1.0, lv.j * phi_coord);
}

// Deterministic order: s (list order), then l ascending.
inline std::vector<RingLevel> ring_spectrum(IntRange l_range, const std::vector<Spin>& s_values,
                                            double m, double varpi, double R,
                                            double phi_over_2pi) {
    if (l_range.lo > l_range.hi || s_values.empty()) {
        throw domain_error("ring_spectrum: empty range");
    }
    std::vector<RingLevel> rows;
    rows.reserve(static_cast<std::size_t>(l_range.hi - l_range.lo + 1) * s_values.size());
    for (Spin s : s_values) {
        for (int l = l_range.lo; l <= l_range.hi; ++l) {
            rows.push_back(ring_energy(l, s, m, varpi, R, phi_over_2pi));
        }
    }
    return rows;
}

} // namespace mhmw
