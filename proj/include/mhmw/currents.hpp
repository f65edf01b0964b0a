#pragma once

// Persistent spin currents at T = 0. Two routes per system:
//  - central-difference Byers-Yang derivative
//      I = -sum_states dE/dPhi
//    with step 1e-6 * 2pi in Phi, and
//  - closed forms: each occupied Landau state contributes
//      (varpi/4pi) * (s + sgn(gamma)),      gamma = l + (1-s)/2 - Phi/2pi,
//    each occupied ring state contributes
//      bracket / (2pi m R^2),               bracket as in the ring levels.
// The Landau constant term is placed per occupied state so the sum
// reproduces the Byers-Yang derivative for arbitrary occupation; the
// printed single-constant form is available under `verbatim`.
//
// Occupation is explicit caller input (the summation range is not fixed
// by any convention here). Summation runs in ascending state order with
// compensated accumulation.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "mhmw/errors.hpp"
#include "mhmw/landau.hpp"
#include "mhmw/model.hpp"
#include "mhmw/ring.hpp"

namespace mhmw {

inline constexpr double crossing_threshold = 1e-3;

struct OccupationSet {
    std::vector<QuantumState> states; // sorted ascending, no duplicates

    static OccupationSet checked(std::vector<QuantumState> states) {
        if (states.empty()) throw domain_error("OccupationSet: must be non-empty");
        std::sort(states.begin(), states.end());
        for (std::size_t i = 1; i < states.size(); ++i) {
            if (states[i] == states[i - 1]) {
                throw domain_error("OccupationSet: duplicate state " + to_string(states[i]));
            }
        }
        const bool ring = !states.front().n.has_value();
        for (const auto& st : states) {
            if (st.n.has_value() == ring) {
                throw domain_error("OccupationSet: mixed ring and Landau states");
            }
            if (st.n && *st.n < 0) throw domain_error("OccupationSet: n must be >= 0");
        }
        return {std::move(states)};
    }

    bool is_ring() const { return !states.front().n.has_value(); }
};

inline std::string to_string(const OccupationSet& occ) {
    std::string out;
    for (std::size_t i = 0; i < occ.states.size(); ++i) {
        if (i) out += ";";
        out += to_string(occ.states[i]);
    }
    return out;
}

enum class CurrentMethod { closed_form, byers_yang_fd };

inline const char* to_string(CurrentMethod m) {
    return m == CurrentMethod::closed_form ? "closed_form" : "byers_yang_fd";
}

struct CurrentResult {
    double value = 0.0;
    CurrentMethod method = CurrentMethod::closed_form;
    bool near_crossing = false;
    double crossing_distance = std::numeric_limits<double>::infinity();
};

namespace detail {

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

inline double min_gamma_distance(const OccupationSet& occ, double phi_over_2pi) {
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& st : occ.states) {
        dist = std::min(dist, std::fabs(gamma_param(st.l, st.s, phi_over_2pi)));
    }
    return dist;
}

} // namespace detail

// Generic Byers-Yang central difference. `energy_of` maps (state,
// phi_over_2pi) to an energy; `crossing_distance_of` (optional) reports
// the distance to the nearest derivative kink, in phi/2pi units.
inline CurrentResult byers_yang_current(
    const std::function<double(const QuantumState&, double)>& energy_of,
    const OccupationSet& occ, double phi_over_2pi, double step_over_2pi = 1e-6,
    const std::function<double(double)>& crossing_distance_of = {}) {
    if (!(step_over_2pi > 0.0)) throw domain_error("byers_yang_current: step must be > 0");

    double dist = std::numeric_limits<double>::infinity();
    if (crossing_distance_of) {
        dist = crossing_distance_of(phi_over_2pi);
        if (dist <= step_over_2pi) {
            throw crossing_error("byers_yang_current: occupied state within one step of a level "
                                 "crossing (distance " + std::to_string(dist) + " in Phi/2pi)");
        }
    }

    detail::KahanSum acc;
    const double dphi = step_over_2pi * two_pi;
    for (const auto& st : occ.states) {
        const double e_plus = energy_of(st, phi_over_2pi + step_over_2pi);
        const double e_minus = energy_of(st, phi_over_2pi - step_over_2pi);
        acc.add(-(e_plus - e_minus) / (2.0 * dphi));
    }
    CurrentResult r;
    r.value = acc.sum;
    r.method = CurrentMethod::byers_yang_fd;
    r.crossing_distance = dist;
    r.near_crossing = dist < crossing_threshold;
    return r;
}

// Byers-Yang on the asymptotic Landau levels (n-independent derivative).
inline CurrentResult byers_yang_landau(const OccupationSet& occ, double varpi,
                                       double phi_over_2pi, double step_over_2pi = 1e-6) {
    if (occ.is_ring()) throw domain_error("byers_yang_landau: occupation has no radial numbers");
    return byers_yang_current(
        [varpi](const QuantumState& st, double t) {
            return energy_asymptotic(*st.n, st.l, st.s, varpi, t);
        },
        occ, phi_over_2pi, step_over_2pi,
        [&occ](double t) { return detail::min_gamma_distance(occ, t); });
}

// Byers-Yang on the ring levels (smooth in Phi, no crossings).
inline CurrentResult byers_yang_ring(const OccupationSet& occ, double m, double varpi, double R,
                                     double phi_over_2pi, double step_over_2pi = 1e-6) {
    if (!occ.is_ring()) throw domain_error("byers_yang_ring: occupation carries radial numbers");
    return byers_yang_current(
        [m, varpi, R](const QuantumState& st, double t) {
            return ring_energy(st.l, st.s, m, varpi, R, t).energy;
        },
        occ, phi_over_2pi, step_over_2pi);
}

// Closed-form Landau current, fixed s. Each state contributes
// (varpi/4pi)(s + sgn(gamma)); `verbatim` instead applies the constant
// once, which matches the derivative only for singleton occupations.
inline CurrentResult landau_current_closed(const OccupationSet& occ, Spin s, double varpi,
                                           double phi_over_2pi, bool verbatim = false) {
    if (occ.is_ring()) throw domain_error("landau_current_closed: occupation has no radial numbers");
    for (const auto& st : occ.states) {
        if (st.s != s) throw domain_error("landau_current_closed: occupation must have fixed s");
    }
    const double unit = varpi / (4.0 * std::numbers::pi);
    const double sv = spin_value(s);
    double dist = std::numeric_limits<double>::infinity();
    detail::KahanSum acc;
    if (verbatim) acc.add(unit * sv);
    for (const auto& st : occ.states) {
        const double g = gamma_param(st.l, s, phi_over_2pi);
        if (g == 0.0) {
            throw crossing_error("landau_current_closed: sgn(0) at occupied state " +
                                 to_string(st) + " (level crossing)");
        }
        dist = std::min(dist, std::fabs(g));
        const double sgn = g > 0.0 ? 1.0 : -1.0;
        acc.add(verbatim ? unit * sgn : unit * (sv + sgn));
    }
    CurrentResult r;
    r.value = acc.sum;
    r.method = CurrentMethod::closed_form;
    r.crossing_distance = dist;
    r.near_crossing = dist < crossing_threshold;
    return r;
}

// Closed-form ring current, fixed s; smooth in Phi.
inline CurrentResult ring_current_closed(const OccupationSet& occ, Spin s, double m,
                                         double varpi, double R, double phi_over_2pi) {
    if (!occ.is_ring()) throw domain_error("ring_current_closed: occupation carries radial numbers");
    if (!(R > 0.0)) throw domain_error("ring_current_closed: requires R > 0");
    for (const auto& st : occ.states) {
        if (st.s != s) throw domain_error("ring_current_closed: occupation must have fixed s");
    }
    const double unit = 1.0 / (two_pi * m * R * R);
    detail::KahanSum acc;
    for (const auto& st : occ.states) {
        acc.add(unit * detail::ring_bracket(st.l, s, phi_over_2pi, m, varpi, R));
    }
    CurrentResult r;
    r.value = acc.sum;
    r.method = CurrentMethod::closed_form;
    return r;
}

} // namespace mhmw
