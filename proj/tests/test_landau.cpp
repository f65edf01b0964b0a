#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "mhmw/landau.hpp"
#include "mhmw/oracle.hpp"

using namespace mhmw;

namespace {

DerivedParams make_dp(double varpi, double phi_over_2pi, double y0) {
    DerivedParams dp;
    dp.varpi = varpi;
    dp.phi_over_2pi = phi_over_2pi;
    dp.phi_mhmw = two_pi * phi_over_2pi;
    dp.y0 = y0;
    return dp;
}

} // namespace

TEST_CASE("energy_asymptotic examples") {
    CHECK(energy_asymptotic(2, 0, Spin::up, 2.0, 0.0) == 4.0);
    CHECK(energy_asymptotic(1, -3, Spin::up, 2.0, 0.0) == 2.0);
    CHECK(energy_asymptotic(0, 1, Spin::up, 2.0, 0.3) == Catch::Approx(1.4).epsilon(1e-15));
    CHECK_THROWS_AS(energy_asymptotic(-1, 0, Spin::up, 2.0, 0.0), domain_error);
}

TEST_CASE("Landau degeneracy: l <= 0 all collapse to E = varpi*n at zero phase") {
    for (int l = -6; l <= 0; ++l) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(energy_asymptotic(n, l, Spin::up, 2.0, 0.0) == 2.0 * n);
        }
    }
}

TEST_CASE("phase breaks the degeneracy between distinct positive-gamma states") {
    const double t = 0.3183098861837907; // 1/pi, nothing special except non-integer
    const double e1 = energy_asymptotic(0, 1, Spin::up, 2.0, t);
    const double e2 = energy_asymptotic(0, 2, Spin::up, 2.0, t);
    CHECK(e1 != e2);
    CHECK(e2 - e1 == Catch::Approx(2.0).epsilon(1e-14)); // gamma increments by 1
}

TEST_CASE("periodicity identities on the asymptotic levels") {
    // dyadic phases: identities are bit-exact
    for (int k = -32; k <= 32; ++k) {
        const double t = k / 16.0;
        CHECK(energy_asymptotic(0, 2, Spin::up, 2.0, t + 1.0) ==
              energy_asymptotic(0, 1, Spin::up, 2.0, t));
        CHECK(energy_asymptotic(3, 1, Spin::up, 2.0, t - 1.0) ==
              energy_asymptotic(3, 2, Spin::up, 2.0, t));
        CHECK(energy_asymptotic(2, -1, Spin::down, 2.0, t + 1.0) ==
              energy_asymptotic(2, -2, Spin::down, 2.0, t));
    }
    // generic phases through the checker
    for (double t : {0.3, -0.77, 1.9, 0.123456}) {
        for (Spin s : {Spin::up, Spin::down}) {
            const auto pc = periodicity_check(1, 2, s, 2.0, t);
            CHECK(pc.holds);
            CHECK(pc.residual_up <= 1e-12 * 2.0);
            CHECK(pc.residual_down <= 1e-12 * 2.0);
        }
    }
}

TEST_CASE("boundary_function: a = 0 gives exactly U = 1 (no root at the n = 0 asymptote)") {
    const double E0 = energy_asymptotic(0, 1, Spin::up, 2.0, 0.3); // gamma = 0.7
    CHECK(boundary_function_gamma(E0, 0.7, Spin::up, 2.0, 1e-4) == 1.0);
    CHECK(boundary_function_gamma(E0, 0.7, Spin::up, 2.0, 0.5) == 1.0);
}

TEST_CASE("boundary_function preconditions") {
    CHECK_THROWS_AS(boundary_function_gamma(1.0, 0.7, Spin::up, 2.0, 0.0), domain_error);
    CHECK_THROWS_AS(boundary_function_gamma(1.0, 5e-7, Spin::up, 2.0, 0.1), domain_error);
    const auto dp = make_dp(2.0, 0.3, 1e-4);
    CHECK(boundary_function(1.0, 1, Spin::up, dp, 1.0) ==
          boundary_function_gamma(1.0, 0.7, Spin::up, 2.0, 1e-4));
}

TEST_CASE("boundary_function changes sign between consecutive exact levels") {
    const auto dp = make_dp(2.0, 0.3, 0.5);
    const auto lv0 = energy_exact(0, 1, Spin::up, dp, 1.0);
    const auto lv1 = energy_exact(1, 1, Spin::up, dp, 1.0);
    const double mid = 0.5 * (lv0.energy + lv1.energy);
    const double below = boundary_function(lv0.energy - 0.05, 1, Spin::up, dp, 1.0);
    const double between = boundary_function(mid, 1, Spin::up, dp, 1.0);
    const double above = boundary_function(lv1.energy + 0.05, 1, Spin::up, dp, 1.0);
    CHECK(below * between < 0.0);
    CHECK(between * above < 0.0);
}

TEST_CASE("energy_exact reproduces extended-precision root references") {
    // gamma = 0.7, s = +1, varpi = 2, y0 = 1e-4
    const double refs_small[] = {1.402438045469353, 3.40413695627463919, 5.40557662579946855,
                                 7.40686902312337693};
    // gamma = 0.7, s = +1, varpi = 2, y0 = 0.5
    const double refs_half[] = {2.24969488542232673, 4.63736261627348074, 6.93045708281581308,
                                9.17590099174097696};
    // gamma = 1.5, s = +1, varpi = 2, y0 = 0.5
    const double refs_g15[] = {3.40113160147156058, 5.70048176549646422, 7.94974274266094549,
                               10.1678090533145025};
    for (int n = 0; n < 4; ++n) {
        INFO("n=" << n);
        const auto a = energy_exact_gamma(n, 0.7, Spin::up, 2.0, 1e-4);
        CHECK(std::fabs(a.energy - refs_small[n]) <= 1e-8);
        CHECK(a.method == LevelMethod::exact_root);
        CHECK(a.y0_used == 1e-4);
        CHECK_FALSE(a.unvalidated_regime);
        const auto b = energy_exact_gamma(n, 0.7, Spin::up, 2.0, 0.5);
        CHECK(std::fabs(b.energy - refs_half[n]) <= 1e-8);
        const auto c = energy_exact_gamma(n, 1.5, Spin::up, 2.0, 0.5);
        CHECK(std::fabs(c.energy - refs_g15[n]) <= 1e-8);
    }
}

TEST_CASE("energy_exact: the wall raises levels and ordering is ascending") {
    const auto lv = energy_exact_gamma(0, 0.7, Spin::up, 2.0, 0.5);
    CHECK(lv.energy > 1.4);
    double prev = -1e9;
    for (int n = 0; n < 5; ++n) {
        const double e = energy_exact_gamma(n, 0.7, Spin::up, 2.0, 0.5).energy;
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("energy_exact converges to energy_asymptotic as y0 shrinks") {
    for (Spin s : {Spin::up, Spin::down}) {
        for (double g : {0.7, 1.5}) {
            const double easym = energy_asymptotic_gamma(1, g, s, 2.0);
            double prev = 1e300;
            for (double y0 : {1e-2, 1e-3, 1e-4}) {
                const double diff =
                    std::fabs(energy_exact_gamma(1, g, s, 2.0, y0, 1e-12).energy - easym);
                CHECK(diff < prev);
                prev = diff;
            }
        }
    }
}

TEST_CASE("energy_exact agrees with the FD radial oracle") {
    for (double y0 : {1e-4, 0.5}) {
        const double r_min = std::sqrt(y0); // m*varpi = 2
        const auto tau = radial_fd_eigenvalues_auto(0.7, 2.0, 1.0, r_min, 4, 3e-5);
        for (int n = 0; n < 4; ++n) {
            const double e_fd = fd_energy_from_tau(tau[n], 0.7, Spin::up, 1.0, 2.0);
            const double e_xr = energy_exact_gamma(n, 0.7, Spin::up, 2.0, y0).energy;
            INFO("y0=" << y0 << " n=" << n);
            CHECK(std::fabs(e_fd - e_xr) <= 1e-4 * std::fabs(e_xr));
        }
    }
}

TEST_CASE("energy_exact rejects the integer-b band and missing brackets") {
    CHECK_THROWS_AS(energy_exact_gamma(0, 1e-7, Spin::up, 2.0, 0.1), domain_error);
    // wall far outside the validated regime pushes the ground state
    // beyond the scan window
    CHECK_THROWS_AS(energy_exact_gamma(0, 0.7, Spin::up, 2.0, 100.0), numeric_error);
}

TEST_CASE("unvalidated-regime flag for y0 > 1") {
    const auto lv = energy_exact_gamma(0, 0.7, Spin::up, 2.0, 1.5);
    CHECK(lv.unvalidated_regime);
}

TEST_CASE("radial_wavefunction vanishes at the wall for quantized E") {
    const double y0 = 0.5;
    const auto lv = energy_exact_gamma(0, 0.7, Spin::up, 2.0, y0, 1e-12);
    double fmax = 0.0;
    for (double y = y0; y <= 12.0; y += 0.05) {
        fmax = std::max(fmax,
                        std::fabs(radial_wavefunction_gamma(y, lv.energy, 0.7, Spin::up, 2.0)));
    }
    const double fwall = std::fabs(radial_wavefunction_gamma(y0, lv.energy, 0.7, Spin::up, 2.0));
    CHECK(fwall <= 1e-6 * fmax);
}

TEST_CASE("radial_wavefunction decays monotonically in the far tail") {
    const auto lv = energy_exact_gamma(1, 0.7, Spin::up, 2.0, 0.5);
    double prev = std::fabs(radial_wavefunction_gamma(10.0, lv.energy, 0.7, Spin::up, 2.0));
    for (double y = 10.5; y <= 25.0; y += 0.5) {
        const double cur = std::fabs(radial_wavefunction_gamma(y, lv.energy, 0.7, Spin::up, 2.0));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("radial_wavefunction satisfies the radial ODE to high accuracy") {
    const double y0 = 0.5;
    const auto lv = energy_exact_gamma(0, 0.7, Spin::up, 2.0, y0, 1e-12);
    const double dy = 0.01;
    const double y_first = 0.6;
    std::vector<double> f;
    for (int i = 0; i < 1200; ++i) {
        f.push_back(radial_wavefunction_gamma(y_first + i * dy, lv.energy, 0.7, Spin::up, 2.0));
    }
    const double res = ode_residual(f, y_first, dy, lv.energy, 0.7, Spin::up, 2.0, 1.0);
    CHECK(res < 1e-6);

    // a perturbed profile must fail loudly
    std::vector<double> bad = f;
    for (int i = 0; i < 1200; ++i) bad[i] *= 1.0 + 0.01 * (y_first + i * dy);
    const double res_bad = ode_residual(bad, y_first, dy, lv.energy, 0.7, Spin::up, 2.0, 1.0);
    CHECK(res_bad > 1e-3);
}

TEST_CASE("landau_spectrum ordering, size and singleton consistency") {
    const auto rows = landau_spectrum({0, 2}, {-2, 2}, {Spin::up}, 2.0, 0.0, 0.0,
                                      LevelMethod::asymptotic);
    REQUIRE(rows.size() == 15);
    // order: l ascending, n ascending within l
    CHECK(rows[0].state.l == -2);
    CHECK(*rows[0].state.n == 0);
    CHECK(rows[1].state.l == -2);
    CHECK(*rows[1].state.n == 1);
    // l <= 0 rows collapse to E = varpi*n
    for (const auto& r : rows) {
        if (r.state.l <= 0) CHECK(r.energy == 2.0 * *r.state.n);
    }
    const auto single = landau_spectrum({1, 1}, {1, 1}, {Spin::down}, 2.0, 0.25, 0.0,
                                        LevelMethod::asymptotic);
    REQUIRE(single.size() == 1);
    CHECK(single[0].energy == energy_asymptotic(1, 1, Spin::down, 2.0, 0.25));
}

TEST_CASE("landau_spectrum: shifted-phase table equals the l-shift map") {
    const double t = 0.3;
    const auto base = landau_spectrum({0, 2}, {-3, 2}, {Spin::up, Spin::down}, 2.0, t, 0.0,
                                      LevelMethod::asymptotic);
    const auto shifted = landau_spectrum({0, 2}, {-2, 3}, {Spin::up, Spin::down}, 2.0, t + 1.0,
                                         0.0, LevelMethod::asymptotic);
    REQUIRE(base.size() == shifted.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(shifted[i].state.l == base[i].state.l + 1);
        CHECK(std::fabs(shifted[i].energy - base[i].energy) <= 1e-12 * 2.0);
    }
}
