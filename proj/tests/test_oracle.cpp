#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "mhmw/oracle.hpp"

using namespace mhmw;

TEST_CASE("RadialGrid validation") {
    CHECK_THROWS_AS(RadialGrid::checked(0.0, 1.0, 500), domain_error);
    CHECK_THROWS_AS(RadialGrid::checked(1.0, 0.5, 500), domain_error);
    CHECK_THROWS_AS(RadialGrid::checked(0.1, 1.0, 50), domain_error);
    const auto g = RadialGrid::checked(0.5, 1.5, 999);
    CHECK(g.spacing() == Catch::Approx(0.001).epsilon(1e-12));
}

TEST_CASE("oscillator gate: gamma = 1/2 removes the centrifugal term") {
    // half-line oscillator with Dirichlet origin: tau_k = (m*varpi/2)(4k+3)
    const auto tau = radial_fd_eigenvalues_auto(0.5, 2.0, 1.0, 1e-8, 4, 9e-6);
    for (int k = 0; k < 4; ++k) {
        const double exact = 4.0 * k + 3.0;
        INFO("k=" << k);
        CHECK(std::fabs(tau[k] - exact) <= 1e-6 * exact);
    }
}

TEST_CASE("grid-too-coarse error fires on an impossible budget") {
    const auto grid = RadialGrid::checked(0.01, default_r_max(1.0, 2.0), 500);
    CHECK_THROWS_AS(radial_fd_eigenvalues(0.7, 2.0, 1.0, grid, 2, 1e-14), numeric_error);
}

TEST_CASE("FD energies converge to the frozen exact-root references") {
    // roots of U(a(E), |gamma|+1; y0) from an extended-precision scan
    const double rmax = default_r_max(1.0, 2.0);
    const double refs_small[] = {1.402438045469353, 3.40413695627463919, 5.40557662579946855,
                                 7.40686902312337693}; // gamma=0.7, y0=1e-4
    const double refs_half[] = {2.24969488542232673, 4.63736261627348074, 6.93045708281581308,
                                9.17590099174097696}; // gamma=0.7, y0=0.5
    const auto grid_small = RadialGrid::checked(0.01, rmax, 8001);
    const auto tau_small = fd_eigenvalues_grid(0.7, 2.0, 1.0, grid_small, 4);
    const auto grid_half = RadialGrid::checked(std::sqrt(0.5), rmax, 8001);
    const auto tau_half = fd_eigenvalues_grid(0.7, 2.0, 1.0, grid_half, 4);
    for (int k = 0; k < 4; ++k) {
        const double e_small = fd_energy_from_tau(tau_small[k], 0.7, Spin::up, 1.0, 2.0);
        const double e_half = fd_energy_from_tau(tau_half[k], 0.7, Spin::up, 1.0, 2.0);
        INFO("k=" << k);
        CHECK(std::fabs(e_small - refs_small[k]) <= 1e-5 * refs_small[k]);
        CHECK(std::fabs(e_half - refs_half[k]) <= 1e-5 * refs_half[k]);
    }
}

TEST_CASE("Richardson consistency: second-order convergence signature") {
    const double rmax = default_r_max(1.0, 2.0);
    const int n = 2000;
    const auto t1 = fd_eigenvalues_grid(0.7, 2.0, 1.0, RadialGrid::checked(std::sqrt(0.5), rmax, n), 3);
    const auto t2 = fd_eigenvalues_grid(0.7, 2.0, 1.0, RadialGrid::checked(std::sqrt(0.5), rmax, 2 * n + 1), 3);
    const auto t4 = fd_eigenvalues_grid(0.7, 2.0, 1.0, RadialGrid::checked(std::sqrt(0.5), rmax, 4 * n + 3), 3);
    for (int k = 0; k < 3; ++k) {
        const double ratio = std::fabs(t1[k] - t2[k]) / std::fabs(t2[k] - t4[k]);
        INFO("k=" << k);
        CHECK(ratio >= 3.8);
        CHECK(ratio <= 4.2);
    }
}

TEST_CASE("unsymmetrized discretization agrees with the symmetrized form") {
    const double rmax = default_r_max(1.0, 2.0);
    const auto grid = RadialGrid::checked(std::sqrt(0.5), rmax, 16003);
    const auto ts = fd_eigenvalues_grid(0.7, 2.0, 1.0, grid, 3);
    const auto tu = fd_eigenvalues_unsymmetrized(0.7, 2.0, 1.0, grid, 3);
    for (int k = 0; k < 3; ++k) {
        INFO("k=" << k);
        CHECK(std::fabs(ts[k] - tu[k]) <= 1e-6 * std::fabs(ts[k]));
    }
}

TEST_CASE("ring dispersion oracle") {
    CHECK(ring_dispersion_oracle(0, 0.0) == 0.25);
    const double beta = ring_dispersion_oracle(0, -0.5);
    CHECK(beta == Catch::Approx(0.75).epsilon(1e-15));
    // reconstruct E = (beta + nu^2 - m varpi R^2)/(2 m R^2) for m=1, R=1, varpi=2
    const double E = (beta + 0.25 - 2.0) / 2.0;
    CHECK(E == Catch::Approx(-0.5).epsilon(1e-14));
    // bracket-zero state: nu = l + 1/2 gives beta = -nu^2
    const double nu = 0.5;
    CHECK(ring_dispersion_oracle(0, nu) == Catch::Approx(-nu * nu).epsilon(1e-15));
}

TEST_CASE("ode_residual rejects short samples and flags non-solutions") {
    std::vector<double> f(8, 1.0);
    CHECK_THROWS_AS(ode_residual(f, 0.5, 0.01, 1.0, 0.7, Spin::up, 2.0, 1.0), domain_error);

    // constant f with gamma != 0 cannot solve the equation; at small y the
    // gamma^2/(4y) term dominates the residual
    std::vector<double> c(64, 1.0);
    const double y0 = 0.05, dy = 0.01;
    const double res = ode_residual(c, y0, dy, 1.4, 0.7, Spin::up, 2.0, 1.0);
    CHECK(res > 0.5);
}

TEST_CASE("fd_energy_from_tau inverts the tau definition") {
    const double tau = 3.4;
    const double E = fd_energy_from_tau(tau, 0.7, Spin::up, 1.0, 2.0);
    CHECK(2.0 * 1.0 * E - 1.0 * 1.0 * 2.0 * 0.7 + 1.0 * 2.0 == Catch::Approx(tau).epsilon(1e-15));
    CHECK(E == Catch::Approx(1.4).epsilon(1e-14));
}
