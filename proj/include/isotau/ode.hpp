#ifndef ISOTAU_ODE_HPP
#define ISOTAU_ODE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"

namespace isotau {

// Adaptive embedded Dormand-Prince 5(4) over complex state vectors,
// real independent variable. PI step-size control, FSAL.
//
// Step-size collapse is treated as a pole on the path: after three retries
// at shrinking tolerance the integrator reports PoleEncountered with the
// current location (the callers integrate Painleve/Schlesinger flows whose
// only finite-distance failure mode is a movable pole).

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double hmin_factor = 1e-14;      // hmin = factor * |t1 - t0|
    std::size_t max_steps = 2'000'000;
};

using OdeState = std::vector<Complex>;

template <class Rhs, class Observer>
inline void integrate_dopri5(Rhs&& rhs, OdeState& y, double t0, double t1,
                             const OdeOptions& opt, Observer&& observe) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const std::size_t n = y.size();
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (span == 0.0) return;
    const double hmin = opt.hmin_factor * span;

    OdeState k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n);
    double t = t0;
    rhs(t, y, k1);
    observe(t, y);

    // initial step guess
    double ny = 0, nf = 0;
    for (std::size_t i = 0; i < n; ++i) { ny += std::norm(y[i]); nf += std::norm(k1[i]); }
    double h = std::min(span, 0.01 * std::sqrt((ny + 1e-30) / (nf + 1e-30)));
    h = std::max(h, 16.0 * hmin);

    double err_prev = 1.0;
    int collapse_retries = 0;
    for (std::size_t step = 0; step < opt.max_steps; ++step) {
        if (dir * (t + dir * h - t1) > 0.0) h = std::abs(t1 - t);
        double hd = dir * h;

        auto stage = [&](OdeState& k, double frac, auto&&... terms) {
            for (std::size_t i = 0; i < n; ++i) {
                Complex acc = y[i];
                ((acc += hd * terms.first * (*terms.second)[i]), ...);
                yt[i] = acc;
            }
            rhs(t + frac * hd, yt, k);
        };
        using P = std::pair<double, const OdeState*>;
        stage(k2, c2, P{a21, &k1});
        stage(k3, c3, P{a31, &k1}, P{a32, &k2});
        stage(k4, c4, P{a41, &k1}, P{a42, &k2}, P{a43, &k3});
        stage(k5, c5, P{a51, &k1}, P{a52, &k2}, P{a53, &k3}, P{a54, &k4});
        stage(k6, 1.0, P{a61, &k1}, P{a62, &k2}, P{a63, &k3}, P{a64, &k4}, P{a65, &k5});
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + hd * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + hd, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex e = hd * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i]
                              + e6 * k6[i] + e7 * k7[i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            double r = std::abs(e) / sc;
            err += r * r;
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (err <= 1.0 || !std::isfinite(err)) {
            if (!std::isfinite(err)) {
                // overflow inside the step: shrink hard, count as collapse
                h *= 0.1;
                if (h < hmin && ++collapse_retries > 3)
                    throw PoleEncountered("ode: non-finite state (pole on path)", t);
                continue;
            }
            t += hd;
            y.swap(ynew);
            k1.swap(k7);   // FSAL
            observe(t, y);
            if (dir * (t - t1) >= 0.0) return;
            double fac = 0.9 * std::pow(err + 1e-30, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            fac = std::min(5.0, std::max(0.2, fac));
            h = std::min(h * fac, span);
            err_prev = std::max(err, 1e-30);
        } else {
            h *= std::max(0.1, 0.9 * std::pow(err, -0.2));
        }
        if (h < hmin) {
            if (++collapse_retries <= 3) {
                h = 16.0 * hmin;
                continue;
            }
            throw PoleEncountered("ode: step size collapse (pole on path)", t);
        }
    }
    throw ToleranceError("ode: step budget exhausted");
}

template <class Rhs>
inline void integrate_dopri5(Rhs&& rhs, OdeState& y, double t0, double t1,
                             const OdeOptions& opt = {}) {
    integrate_dopri5(std::forward<Rhs>(rhs), y, t0, t1, opt,
                     [](double, const OdeState&) {});
}

} // namespace isotau

#endif
