#pragma once

// Independent brute-force verification tools:
//  - a finite-difference eigensolver for the radial equation
//      f'' + (1/r) f' - (gamma^2/r^2) f - (m^2 varpi^2/4) r^2 f + tau f = 0
//    with a hard wall at r_min, in the symmetrized form (f = u/sqrt(r))
//      -u'' + [(gamma^2 - 1/4)/r^2 + (m varpi/2)^2 r^2] u = tau u,
//    eigenvalues by Sturm-sequence bisection on the tridiagonal matrix;
//  - the same operator discretized directly in f (non-symmetric three-
//    point scheme, solved via diagonal similarity) as a cross-check;
//  - the ring dispersion rearrangement beta = j^2 - 2 nu j;
//  - a high-order residual check of the dimensionless radial equation.
//
// Energies are recovered from tau via E = (tau + s m varpi gamma - m varpi)/(2m).

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "mhmw/errors.hpp"
#include "mhmw/model.hpp"

namespace mhmw {

struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    int n_interior = 0;

    static RadialGrid checked(double r_min, double r_max, int n_interior) {
        if (!(r_max > r_min) || !(r_min > 0.0)) {
            throw domain_error("RadialGrid: requires r_max > r_min > 0");
        }
        if (n_interior < 100) throw domain_error("RadialGrid: requires N >= 100");
        return {r_min, r_max, n_interior};
    }

    double spacing() const { return (r_max - r_min) / (n_interior + 1); }
};

// r_max such that the Gaussian factor exp(-m varpi r^2/4) < 1e-18.
inline double default_r_max(double m, double varpi) {
    return std::sqrt(4.0 * 41.5 / (m * varpi));
}

namespace detail {

// Number of eigenvalues of the symmetric tridiagonal (diag, off^2)
// strictly below x, via the Sturm sequence of LDL^T pivots.
inline int sturm_count_below(std::span<const double> diag, std::span<const double> off2,
                             double x) {
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (q == 0.0) q = -1e-300;
        q = diag[i] - x - off2[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

// k-th smallest eigenvalue (0-based) by bisection to abs_tol.
inline double tridiag_eigenvalue(std::span<const double> diag, std::span<const double> off2,
                                 int k, double abs_tol) {
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double r1 = i > 0 ? std::sqrt(off2[i - 1]) : 0.0;
        const double r2 = i + 1 < diag.size() ? std::sqrt(off2[i]) : 0.0;
        lo = std::min(lo, diag[i] - r1 - r2);
        hi = std::max(hi, diag[i] + r1 + r2);
    }
    for (int it = 0; it < 200 && hi - lo > abs_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (detail::sturm_count_below(diag, off2, mid) <= k) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double effective_potential_u(double r, double gamma, double m, double varpi) {
    const double c = 0.5 * m * varpi;
    return (gamma * gamma - 0.25) / (r * r) + c * c * r * r;
}

} // namespace detail

// k lowest tau eigenvalues of the symmetrized discretization on one grid.
inline std::vector<double> fd_eigenvalues_grid(double gamma, double varpi, double m,
                                               const RadialGrid& grid, int k) {
    if (!(m > 0.0) || !(varpi > 0.0)) {
        throw domain_error("fd_eigenvalues_grid: requires m > 0 and varpi > 0");
    }
    if (k < 1 || k > grid.n_interior / 10) {
        throw domain_error("fd_eigenvalues_grid: requires 1 <= k <= N/10");
    }
    const int n = grid.n_interior;
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> diag(n), off2(n - 1, inv_h2 * inv_h2);
    for (int i = 0; i < n; ++i) {
        const double r = grid.r_min + (i + 1) * h;
        diag[i] = 2.0 * inv_h2 + detail::effective_potential_u(r, gamma, m, varpi);
    }
    const double abs_tol = 1e-10 * m * varpi;
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        out[j] = detail::tridiag_eigenvalue(diag, off2, j, abs_tol);
    }
    return out;
}

// Direct discretization of the radial equation in f (non-symmetric
// three-point scheme), reduced to a similar symmetric tridiagonal.
inline std::vector<double> fd_eigenvalues_unsymmetrized(double gamma, double varpi, double m,
                                                        const RadialGrid& grid, int k) {
    if (k < 1 || k > grid.n_interior / 10) {
        throw domain_error("fd_eigenvalues_unsymmetrized: requires 1 <= k <= N/10");
    }
    const int n = grid.n_interior;
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    if (!(h < 2.0 * grid.r_min)) {
        throw domain_error("fd_eigenvalues_unsymmetrized: needs h < 2*r_min for a similar "
                           "symmetric form");
    }
    const double c = 0.5 * m * varpi;
    std::vector<double> diag(n), off2(n - 1);
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
        r[i] = grid.r_min + (i + 1) * h;
        diag[i] = 2.0 * inv_h2 + gamma * gamma / (r[i] * r[i]) + c * c * r[i] * r[i];
    }
    for (int i = 0; i + 1 < n; ++i) {
        // row i super-coefficient and row i+1 sub-coefficient
        const double super_i = -inv_h2 - 1.0 / (2.0 * h * r[i]);
        const double sub_ip1 = -inv_h2 + 1.0 / (2.0 * h * r[i + 1]);
        off2[i] = super_i * sub_ip1;
    }
    const double abs_tol = 1e-10 * m * varpi;
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        out[j] = detail::tridiag_eigenvalue(diag, off2, j, abs_tol);
    }
    return out;
}

// Eigenvalues with a doubling consistency check: solves on the given
// grid and on the nested half-spacing grid; throws if any eigenvalue
// moves by more than `budget`. Returns the fine-grid values.
inline std::vector<double> radial_fd_eigenvalues(double gamma, double varpi, double m,
                                                 const RadialGrid& grid, int k,
                                                 double budget) {
    const auto coarse = fd_eigenvalues_grid(gamma, varpi, m, grid, k);
    const RadialGrid fine = RadialGrid::checked(grid.r_min, grid.r_max,
                                                2 * grid.n_interior + 1);
    const auto refined = fd_eigenvalues_grid(gamma, varpi, m, fine, k);
    for (int j = 0; j < k; ++j) {
        if (std::fabs(refined[j] - coarse[j]) > budget) {
            throw numeric_error("radial_fd_eigenvalues: grid too coarse, eigenvalue " +
                                std::to_string(j) + " moved " +
                                std::to_string(std::fabs(refined[j] - coarse[j])) +
                                " on doubling (budget " + std::to_string(budget) + ")");
        }
    }
    return refined;
}

// Automatic refinement from N = 4000: doubles the grid until the
// doubling change is within budget (second-order convergence makes the
// returned fine-grid error ~ change/3).
inline std::vector<double> radial_fd_eigenvalues_auto(double gamma, double varpi, double m,
                                                      double r_min, int k, double budget,
                                                      int n_start = 4000) {
    const double r_max = default_r_max(m, varpi);
    int n = n_start;
    auto values = fd_eigenvalues_grid(gamma, varpi, m, RadialGrid::checked(r_min, r_max, n), k);
    for (int pass = 0; pass < 6; ++pass) {
        const int n2 = 2 * n + 1;
        auto fine = fd_eigenvalues_grid(gamma, varpi, m, RadialGrid::checked(r_min, r_max, n2), k);
        double worst = 0.0;
        for (int j = 0; j < k; ++j) worst = std::max(worst, std::fabs(fine[j] - values[j]));
        values = std::move(fine);
        n = n2;
        if (worst <= budget) return values;
    }
    throw numeric_error("radial_fd_eigenvalues_auto: grid doubling cap reached without "
                        "meeting budget " + std::to_string(budget));
}

// E = (tau + s m varpi gamma - m varpi)/(2m).
inline double fd_energy_from_tau(double tau, double gamma, Spin s, double m, double varpi) {
    return (tau + spin_value(s) * m * varpi * gamma - m * varpi) / (2.0 * m);
}

// beta = (l+1/2)^2 - 2 nu (l+1/2), the dispersion relation solved for beta.
inline double ring_dispersion_oracle(int l, double nu) {
    const double j = l + 0.5;
    return j * j - 2.0 * nu * j;
}

namespace detail {

// 8th-order central difference weights (spacing 1).
inline constexpr double d1_w[9] = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0.0,
                                   4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
inline constexpr double d2_w[9] = {-1.0 / 560, 8.0 / 315, -1.0 / 5, 8.0 / 5, -205.0 / 72,
                                   8.0 / 5, -1.0 / 5, 8.0 / 315, -1.0 / 560};

} // namespace detail

// Max-norm residual of the dimensionless radial equation
//   y f'' + f' - (gamma^2/4y) f - (y/4) f + (tau/2 m varpi) f = 0
// over the interior of a uniformly sampled f, each point scaled by the
// local (9-point window) max of |f|. `y_first` is the y of f[0] and
// `dy` the sample spacing.
inline double ode_residual(std::span<const double> f, double y_first, double dy, double E,
                           double gamma, Spin s, double varpi, double m) {
    if (f.size() < 9) {
        throw domain_error("ode_residual: needs at least 9 samples, got " +
                           std::to_string(f.size()));
    }
    if (!(dy > 0.0) || !(y_first > 0.0)) {
        throw domain_error("ode_residual: requires y_first > 0 and dy > 0");
    }
    const double tau = 2.0 * m * E - spin_value(s) * m * varpi * gamma + m * varpi;
    const double c = tau / (2.0 * m * varpi);
    double worst = 0.0;
    for (std::size_t i = 4; i + 4 < f.size(); ++i) {
        const double y = y_first + i * dy;
        double d1 = 0.0, d2 = 0.0, local = 0.0;
        for (int w = 0; w < 9; ++w) {
            const double fv = f[i + w - 4];
            d1 += detail::d1_w[w] * fv;
            d2 += detail::d2_w[w] * fv;
            local = std::max(local, std::fabs(fv));
        }
        if (local == 0.0) continue;
        d1 /= dy;
        d2 /= (dy * dy);
        const double res = y * d2 + d1 - (gamma * gamma / (4.0 * y)) * f[i] -
                           0.25 * y * f[i] + c * f[i];
        worst = std::max(worst, std::fabs(res) / local);
    }
    return worst;
}

} // namespace mhmw
