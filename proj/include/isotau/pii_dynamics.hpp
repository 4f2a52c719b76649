#ifndef ISOTAU_PII_DYNAMICS_HPP
#define ISOTAU_PII_DYNAMICS_HPP

#include <cmath>
#include <vector>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/ode.hpp"
#include "isotau/pii_asymptotics.hpp"
#include "isotau/pii_stokes.hpp"
#include "isotau/pii_tau.hpp"

// PII dynamics: trajectory integration with optional variational rows,
// the localized 1-form, the numeric connection constant, and the
// Hastings-McLeod constant check.

namespace isotau::pii {

struct PIIState {
    double t;
    Complex u, v;               // v = 2 u_t
    bool hasVariational = false;
    Complex uS1, vS1, uS2, vS2; // d/ds_j of (u, v)

    Complex hamiltonian() const { return v * v / 4.0 - t * u * u - u * u * u * u; }
};

struct PIITrajectory {
    std::vector<PIIState> samples;
    Complex intH;               // integral of H over the run
    PIIState final;
};

namespace detail {

// central differences of the asymptotic data in the (s1, s2) chart
inline void seed_variational(const PIIStokes& s, double t, Side side, double h,
                             PIIState& st) {
    auto up = [&](Complex ds1, Complex ds2) {
        return u_asymptotic(PIIStokes::from_s1s2(s.s1 + ds1, s.s2 + ds2), t, side);
    };
    const UPair p1 = up(h, 0.0), m1 = up(-h, 0.0);
    const UPair p2 = up(0.0, h), m2 = up(0.0, -h);
    st.uS1 = (p1.u - m1.u) / (2.0 * h);
    st.vS1 = (p1.ut - m1.ut) / h;        // v = 2 u_t
    st.uS2 = (p2.u - m2.u) / (2.0 * h);
    st.vS2 = (p2.ut - m2.ut) / h;
    st.hasVariational = true;
}

} // namespace detail

inline PIITrajectory integrate_pii(const PIIStokes& s, double T, double tol,
                                   bool variational = false, bool keep_samples = true) {
    if (T < 25.0) throw ValidityError("integrate_pii: T < 25");
    PIIState init;
    init.t = -T;
    if (std::abs(s.s1) + std::abs(s.s2) + std::abs(s.s3) < 1e-15) {
        // zero Stokes data corresponds exactly to the zero solution
        init.u = init.v = 0.0;
        if (variational) throw ValidityError("integrate_pii: variational rows need generic data");
    } else {
        require_generic(s);
        const UPair u0 = u_asymptotic(s, -T, Side::MinusInf);
        init.u = u0.u;
        init.v = 2.0 * u0.ut;
        if (variational) detail::seed_variational(s, -T, Side::MinusInf, 1e-6, init);
    }

    const std::size_t n = variational ? 7 : 3;
    OdeState y(n);
    y[0] = init.u;
    y[1] = init.v;
    y[2] = 0.0;   // integral of H
    if (variational) {
        y[3] = init.uS1; y[4] = init.vS1; y[5] = init.uS2; y[6] = init.vS2;
    }
    auto rhs = [variational](double t, const OdeState& yy, OdeState& dy) {
        const Complex u = yy[0], v = yy[1];
        dy[0] = v / 2.0;
        dy[1] = 2.0 * (2.0 * u * u * u + t * u);
        dy[2] = v * v / 4.0 - t * u * u - u * u * u * u;
        if (variational) {
            const Complex lin = 6.0 * u * u + t;
            dy[3] = yy[4] / 2.0;
            dy[4] = 2.0 * lin * yy[3];
            dy[5] = yy[6] / 2.0;
            dy[6] = 2.0 * lin * yy[5];
        }
    };
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol * 1e-2;
    PIITrajectory tr;
    auto unpack = [variational](double t, const OdeState& yy) {
        PIIState st;
        st.t = t;
        st.u = yy[0];
        st.v = yy[1];
        if (variational) {
            st.hasVariational = true;
            st.uS1 = yy[3]; st.vS1 = yy[4]; st.uS2 = yy[5]; st.vS2 = yy[6];
        }
        return st;
    };
    auto observer = [&](double t, const OdeState& yy) {
        if (keep_samples) tr.samples.push_back(unpack(t, yy));
    };
    integrate_dopri5(rhs, y, -T, T, opt, observer);
    tr.final = unpack(T, y);
    tr.intH = y[2];
    return tr;
}

struct OmegaComponents {
    Complex omegaT, omegaS1, omegaS2;
};

// the localized 1-form: omega_t and the two monodromy components built from
// the variational rows (u_{t s_j} = vS_j / 2)
inline OmegaComponents omega_pii(const PIIState& st) {
    if (!st.hasVariational)
        throw ValidityError("omega_pii: variational rows required");
    const Complex u = st.u, ut = st.v / 2.0;
    const double t = st.t;
    OmegaComponents w;
    w.omegaT = ut * ut - u * u * u * u - t * u * u;
    auto comp = [&](Complex us, Complex uts) {
        return 2.0 / 3.0 * (2.0 * ut * us - 4.0 * u * u * u * t * us - u * uts
                            + 2.0 * t * ut * uts - 2.0 * u * t * t * us);
    };
    w.omegaS1 = comp(st.uS1, st.vS1 / 2.0);
    w.omegaS2 = comp(st.uS2, st.vS2 / 2.0);
    return w;
}

// coefficient of ds1 ^ ds2 in d omega; constant in t, equal to
// (i/pi) (ds3/ds2) / (1 - s1 s3) in the (s1, s2) chart
inline Complex domega_coefficient(const PIIState& st) {
    if (!st.hasVariational)
        throw ValidityError("domega_coefficient: variational rows required");
    return st.vS1 * st.uS2 - st.vS2 * st.uS1;
}

inline Complex domega_chart_value(const PIIStokes& s) {
    const Complex ds3_ds2 = (1.0 + s.s1 * s.s1) / ((1.0 + s.s1 * s.s2) * (1.0 + s.s1 * s.s2));
    return kI / kPi * ds3_ds2 / (1.0 - s.s1 * s.s3);
}

struct UpsilonPIINumeric {
    Complex upsilonNumeric;
    Complex upsilonClosedForm;
    double relError;
    double endpointMismatch;   // |u_ode(+T) - u_series(+T)|
};

// ln Upsilon = int_{-T}^{T} H dt - P_plus(T) + P_minus(-T) + both tail
// integrals of (H_series - smooth primitive); see the tau asymptotics at the
// two ends of the real line.
inline UpsilonPIINumeric upsilon_pii_numeric(const PIIStokes& s, double T, double tol) {
    const PIIExponents e = exponents_from_stokes(s);
    const Amplitudes a = amplitudes(s, e);
    const PIITrajectory tr = integrate_pii(s, T, tol, false, false);

    const Complex mu = e.mu, nu = e.nu;
    const double T32 = std::pow(T, 1.5), lnT = std::log(T);
    const Complex Pplus = T * T * T / 12.0 + 2.0 * kI * std::sqrt(2.0) * nu / 3.0 * T32
                        - (6.0 * nu * nu + 1.0) / 8.0 * lnT;
    const Complex Pminus = -4.0 * kI * mu / 3.0 * T32 - 1.5 * mu * mu * lnT;

    const TwoScaleSeries Hm = hamiltonian_series(u_series_minus(a, e.mu));
    const TwoScaleSeries Hp = hamiltonian_series(u_series_plus(a, e.nu, e.sgn));
    // smooth primitives: P_minus' and P_plus' in the |t| variable
    const std::map<int, Complex> smoothM = {{-2, 2.0 * kI * mu}, {4, 1.5 * mu * mu}};
    const std::map<int, Complex> smoothP = {{-8, Complex(0.25)},
                                            {-2, kI * std::sqrt(2.0) * nu},
                                            {4, -(6.0 * nu * nu + 1.0) / 8.0}};
    const Complex tailM = tau_tail_integral(Hm, T, smoothM);
    const Complex tailP = tau_tail_integral(Hp, T, smoothP);

    UpsilonPIINumeric r;
    const Complex lnU = tr.intH - Pplus + Pminus + tailP + tailM;
    r.upsilonNumeric = std::exp(lnU);
    r.upsilonClosedForm = upsilon_pii_closed(s);
    r.relError = std::abs(r.upsilonNumeric / r.upsilonClosedForm - 1.0);
    const UPair up = u_asymptotic(s, T, Side::PlusInf);
    r.endpointMismatch = std::abs(tr.final.u - up.u);
    return r;
}

// ------------------------- Hastings-McLeod -------------------------

namespace detail {

// parabola-branch series u = sqrt(x/2) sum a_n x^{-3n}, x = -t, and its
// t-derivative; coefficients from the recursion of eq-P2 on the branch
inline UPair hm_branch(double x) {
    static constexpr double an[5] = {1.0, -0.125, -73.0 / 128.0, -10657.0 / 1024.0,
                                     -424.608154296875};
    double v = 0.0, vp = 0.0;
    for (int n = 0; n < 5; ++n) {
        const double p = std::pow(x, -3.0 * n);
        v += an[n] * p;
        vp += -3.0 * n * an[n] * p / x;
    }
    const double sq = std::sqrt(x / 2.0);
    const double u = sq * v;
    const double ux = v / (2.0 * std::sqrt(2.0 * x)) + sq * vp;
    return {u, -ux};
}

// Ai-type decaying direction (f, f') at large t > 0, from the standard
// asymptotic series (unnormalized; only the direction matters)
inline UPair airy_direction(double t) {
    const double z = 2.0 / 3.0 * std::pow(t, 1.5);
    double uk = 1.0, S = 1.0, Sp = 1.0;
    double sign = -1.0;
    for (int k = 1; k <= 6; ++k) {
        uk *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        const double dk = -uk * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        S += sign * uk / std::pow(z, k);
        Sp += sign * dk / std::pow(z, k);
        sign = -sign;
    }
    const double pre = std::exp(-z) / (2.0 * std::sqrt(kPi));
    return {pre / std::pow(t, 0.25) * S, Complex(-pre * std::pow(t, 0.25) * Sp)};
}

struct HmShot {
    bool crashed_up;    // |u| hit the guard with u > 0 before t_far
    double reached;
    Complex u, ut, intH;     // state at t_harvest (valid if reached >= t_harvest)
    bool harvested;
};

inline HmShot hm_shoot(double c, double t_seed, double t_harvest, double t_far, double tol) {
    const UPair b = hm_branch(t_seed);
    // perturbation along the mode that is exponentially small at -inf,
    // normalized to unit u-component at the seed
    const double mode_slope = std::sqrt(2.0 * t_seed) + 0.25 / t_seed;
    OdeState y = {b.u + c, b.ut + c * mode_slope, 0.0};
    HmShot r{};
    r.harvested = false;
    auto rhs = [](double t, const OdeState& yy, OdeState& dy) {
        const Complex u = yy[0], ut = yy[1];
        dy[0] = ut;
        dy[1] = 2.0 * u * u * u + t * u;
        dy[2] = ut * ut - t * u * u - u * u * u * u;
    };
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = 1e-15;
    double t = -t_seed;
    try {
        // integrate in legs so the harvest point is hit exactly
        for (double target : {t_harvest, t_far}) {
            integrate_dopri5([&](double tt, const OdeState& yy, OdeState& dy) {
                if (std::abs(yy[0]) > 40.0)
                    throw PoleEncountered("hm blowup", tt);
                rhs(tt, yy, dy);
            }, y, t, target, opt);
            t = target;
            if (target == t_harvest) {
                r.u = y[0];
                r.ut = y[1];
                r.intH = y[2];
                r.harvested = true;
            }
        }
        r.reached = t_far;
        r.crashed_up = false;
    } catch (const PoleEncountered& p) {
        r.reached = p.location;
        r.crashed_up = y[0].real() > 0.0;
    }
    return r;
}

} // namespace detail

struct HastingsMcLeodResult {
    double upsilonNumeric;
    double target;           // 2^{1/24} e^{zeta'(-1)}
    double relError;
    double u0;               // u(0) of the matched trajectory (diagnostic)
};

// Numerically extract Upsilon_HM by shooting onto the Hastings-McLeod
// separatrix. The boundary data at t -> -inf sit on the sqrt(-t/2) branch;
// the single shooting parameter is the coefficient of the mode that is
// exponentially small there, and the separatrix is the boundary between
// trajectories blowing up (+) and diving (-) on the right half line.
inline HastingsMcLeodResult hastings_mcleod_check(double T, double tol) {
    if (T < 8.0) throw ValidityError("hastings_mcleod_check: T < 8");
    const double t_seed = 7.5, t_harvest = 4.0, t_far = 8.0;
    auto up = [&](double c) { return detail::hm_shoot(c, t_seed, t_harvest, t_far, tol).crashed_up; };
    double lo = -3e-6, hi = 3e-6;
    if (up(lo) || !up(hi))
        throw PoleEncountered("hastings_mcleod_check: shooting bracket failed", 0.0);
    for (int it = 0; it < 140; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (up(mid) ? hi : lo) = mid;
    }
    const detail::HmShot shot = detail::hm_shoot(lo, t_seed, t_harvest, t_far, tol);
    if (!shot.harvested)
        throw PoleEncountered("hastings_mcleod_check: matched trajectory crashed early",
                              shot.reached);

    // u(0) diagnostic from a re-run stopping at 0
    detail::HmShot mid = detail::hm_shoot(lo, t_seed, 0.0, t_harvest, tol);

    // assemble ln Upsilon_HM = -int_{-T}^{inf} H + T^3/12 + (1/8) ln T - Q(T)
    auto H_series = [&](double x) {
        const UPair b = detail::hm_branch(x);
        const Complex h = b.ut * b.ut - (-x) * b.u * b.u - b.u * b.u * b.u * b.u;
        return h.real();
    };
    // series part on [-T, -t_seed] by composite Simpson
    auto simpson = [](auto f, double a, double b, int n) {
        double h = (b - a) / n, s = f(a) + f(b);
        for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    const double i1 = simpson(H_series, t_seed, T, 2000);
    // decaying tail beyond the harvest point from the Ai-direction model
    auto H_tail = [&](double t) {
        const UPair f = detail::airy_direction(t);
        const double ff = f.u.real(), fp = f.ut.real();
        return fp * fp - t * ff * ff - ff * ff * ff * ff;
    };
    const double i3 = simpson(H_tail, t_harvest, 40.0, 4000);
    // Q(T) = int_T^inf [H(x) - x^2/4 - 1/(8x)] dx on the branch
    auto Hq = [&](double x) { return H_series(x) - x * x / 4.0 - 1.0 / (8.0 * x); };
    const double qQ = simpson(Hq, T, 400.0, 6000);

    HastingsMcLeodResult r;
    const double lnU = -(i1 + shot.intH.real() + i3) + T * T * T / 12.0 + std::log(T) / 8.0 - qQ;
    r.upsilonNumeric = std::exp(lnU);
    r.target = upsilon_hm_constant();
    r.relError = std::abs(r.upsilonNumeric / r.target - 1.0);
    r.u0 = mid.harvested ? mid.u.real() : 0.0;
    return r;
}

} // namespace isotau::pii

#endif
