#ifndef ISOTAU_PII_ASYMPTOTICS_HPP
#define ISOTAU_PII_ASYMPTOTICS_HPP

#include <cmath>
#include <map>
#include <utility>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/pii_stokes.hpp"
#include "isotau/specfun.hpp"

// Two-scale asymptotic expansions of the PII transcendent at t -> +-inf,
// with term-by-term calculus on the grading (oscillator power k, algebraic
// power j). At t -> -inf a term is c * p^k * zeta^j with
//   p = exp((2i/3) x^{3/2}) x^{3 mu/2},  zeta = x^{-1/4},  x = -t;
// at t -> +inf it is c * q^k * xi^j with
//   q = exp((2 sqrt2 i/3) t^{3/2}) t^{-3 nu/2},  xi = t^{-1/4}.
// Differentiation and multiplication by t act within the grading, so the
// expansions, the Hamiltonian built from them, and the tail integrals of the
// tau function are all exact consequences of the printed coefficient tables.

namespace isotau::pii {

enum class Side { MinusInf, PlusInf };

struct TwoScaleSeries {
    Side side;
    Complex scale_exp;                       // mu (at -inf) or nu (at +inf)
    std::map<std::pair<int, int>, Complex> terms;   // (k, j) -> coefficient

    void add(int k, int j, Complex c) {
        auto key = std::make_pair(k, j);
        auto it = terms.find(key);
        if (it == terms.end()) terms.emplace(key, c);
        else it->second += c;
    }

    TwoScaleSeries mul(const TwoScaleSeries& o, int jmax) const {
        TwoScaleSeries r{side, scale_exp, {}};
        for (const auto& [k1, c1] : terms)
            for (const auto& [k2, c2] : o.terms) {
                int j = k1.second + k2.second;
                if (j > jmax) continue;
                r.add(k1.first + k2.first, j, c1 * c2);
            }
        return r;
    }

    TwoScaleSeries plus(const TwoScaleSeries& o, Complex fac = 1.0) const {
        TwoScaleSeries r = *this;
        for (const auto& [k, c] : o.terms) r.add(k.first, k.second, fac * c);
        return r;
    }

    // d/dt respecting both scales
    TwoScaleSeries dt() const {
        TwoScaleSeries r{side, scale_exp, {}};
        for (const auto& [kj, c] : terms) {
            const auto [k, j] = kj;
            if (side == Side::MinusInf) {
                r.add(k, j - 2, -kI * static_cast<double>(k) * c);
                r.add(k, j + 4, (j / 4.0 - 1.5 * k * scale_exp) * c);
            } else {
                r.add(k, j - 2, kI * std::sqrt(2.0) * static_cast<double>(k) * c);
                r.add(k, j + 4, -(1.5 * k * scale_exp + j / 4.0) * c);
            }
        }
        return r;
    }

    // multiplication by t (t = -zeta^{-4} at -inf, t = xi^{-4} at +inf)
    TwoScaleSeries times_t() const {
        TwoScaleSeries r{side, scale_exp, {}};
        const Complex f = (side == Side::MinusInf) ? Complex(-1.0) : Complex(1.0);
        for (const auto& [kj, c] : terms) r.add(kj.first, kj.second - 4, f * c);
        return r;
    }

    Complex eval(double t) const {
        const double x = (side == Side::MinusInf) ? -t : t;
        if (x <= 0.0) throw ValidityError("TwoScaleSeries::eval: wrong sign of t");
        const Complex logP = (side == Side::MinusInf)
            ? Complex(0.0, 2.0 / 3.0) * std::pow(x, 1.5) + 1.5 * scale_exp * std::log(x)
            : Complex(0.0, 2.0 * std::sqrt(2.0) / 3.0) * std::pow(x, 1.5)
              - 1.5 * scale_exp * std::log(x);
        const double logZ = -0.25 * std::log(x);
        Complex s = 0.0;
        for (const auto& [kj, c] : terms)
            s += c * std::exp(static_cast<double>(kj.first) * logP + kj.second * logZ);
        return s;
    }
};

// amplitudes of the leading oscillating terms (Gamma-function dictionary)
struct Amplitudes {
    Complex aPlus, aMinus;    // a^{+-}_{0,0}
    Complex bPlus, bMinus;    // b^{+-}_{1,1}
};

inline Amplitudes amplitudes(const PIIStokes& s, const PIIExponents& e) {
    using specfun::gamma;
    Amplitudes a;
    const double sq_pi = std::sqrt(kPi);
    const double sg = e.sgn;
    a.aPlus = sq_pi * std::exp(3.0 * e.mu * std::log(2.0) - kI * kPi * e.mu / 2.0
                               - kI * kPi / 4.0) / (s.s1 * gamma(e.mu));
    a.aMinus = sq_pi * std::exp(-3.0 * e.mu * std::log(2.0) - kI * kPi * e.mu / 2.0
                                + kI * kPi / 4.0) / (s.s3 * gamma(-e.mu));
    a.bPlus = sq_pi * std::exp((-3.5 * e.nu - 0.75) * std::log(2.0) + kI * kPi * e.nu / 2.0
                               - kI * kPi / 4.0) / ((1.0 + s.s2 * s.s3) * gamma(-e.nu));
    a.bMinus = -sq_pi * std::exp((3.5 * e.nu - 0.75) * std::log(2.0) + kI * kPi * e.nu / 2.0
                                 + kI * kPi / 4.0) / ((1.0 + s.s1 * s.s2) * gamma(e.nu));
    (void)sg;
    return a;
}

// u-expansion at t -> -inf through zeta^7
inline TwoScaleSeries u_series_minus(const Amplitudes& a, Complex mu) {
    TwoScaleSeries u{Side::MinusInf, mu, {}};
    const Complex ap = a.aPlus, am = a.aMinus;
    u.add(1, 1, ap);
    u.add(-1, 1, am);
    u.add(1, 7, kI * ap * (-102.0 * mu * mu + 36.0 * mu - 5.0) / 48.0);
    u.add(-1, 7, kI * am * (102.0 * mu * mu + 36.0 * mu + 5.0) / 48.0);
    u.add(3, 7, -ap * ap * ap / 4.0);
    u.add(-3, 7, -am * am * am / 4.0);
    return u;
}

// u-expansion at t -> +inf through xi^10 (times the sign sgn)
inline TwoScaleSeries u_series_plus(const Amplitudes& a, Complex nu, int sgn) {
    TwoScaleSeries u{Side::PlusInf, nu, {}};
    const Complex bp = a.bPlus, bm = a.bMinus;
    const Complex is2 = kI * std::sqrt(2.0);
    u.add(0, -2, kI / std::sqrt(2.0));
    u.add(1, 1, bp);
    u.add(-1, 1, bm);
    u.add(0, 4, -0.75 * nu);
    u.add(2, 4, -is2 / 2.0 * bp * bp);
    u.add(-2, 4, -is2 / 2.0 * bm * bm);
    u.add(1, 7, bp * is2 / 6.0 * (-51.0 / 8.0 * nu * nu - 1.5 * nu - 17.0 / 16.0));
    u.add(-1, 7, bm * is2 / 6.0 * (51.0 / 8.0 * nu * nu - 1.5 * nu + 17.0 / 16.0));
    u.add(3, 7, -bp * bp * bp / 2.0);
    u.add(-3, 7, -bm * bm * bm / 2.0);
    u.add(0, 10, is2 / 2.0 * (51.0 / 32.0 * nu * nu + 0.125));
    u.add(2, 10, (-17.0 / 8.0 * nu * nu - 11.0 / 8.0 * nu - 41.0 / 48.0) * bp * bp);
    u.add(-2, 10, (17.0 / 8.0 * nu * nu - 11.0 / 8.0 * nu + 41.0 / 48.0) * bm * bm);
    u.add(4, 10, is2 / 4.0 * bp * bp * bp * bp);
    u.add(-4, 10, is2 / 4.0 * bm * bm * bm * bm);
    if (sgn == -1)
        for (auto& [k, c] : u.terms) c = -c;
    return u;
}

// H = u_t^2 - t u^2 - u^4 as a two-scale series
inline TwoScaleSeries hamiltonian_series(const TwoScaleSeries& u, int jmax = 18) {
    TwoScaleSeries ut = u.dt();
    TwoScaleSeries u2 = u.mul(u, jmax);
    return ut.mul(ut, jmax).plus(u2.times_t(), -1.0).plus(u2.mul(u2, jmax), -1.0);
}

// truncated asymptotic solution and its t-derivative at |t| >= 25
struct UPair {
    Complex u, ut;
};

inline UPair u_asymptotic(const PIIStokes& s, double t, Side side) {
    if (std::abs(t) < 25.0)
        throw ValidityError("u_asymptotic: |t| < 25 outside validity range");
    if ((side == Side::MinusInf) != (t < 0.0))
        throw ValidityError("u_asymptotic: sign of t inconsistent with side");
    const PIIExponents e = exponents_from_stokes(s);
    const Amplitudes a = amplitudes(s, e);
    const TwoScaleSeries u = (side == Side::MinusInf)
        ? u_series_minus(a, e.mu)
        : u_series_plus(a, e.nu, e.sgn);
    return {u.eval(t), u.dt().eval(t)};
}

// ---- tail integrals of H - (subtracted smooth primitive) on [T, inf) ----

namespace detail {

// integral over [T, inf) of c * x^{alpha} * exp(i k w x^{3/2}) by repeated
// integration by parts (boundary terms only; the integrand decays)
inline Complex oscillatory_tail(Complex c, Complex alpha, int k, double w, double T) {
    const Complex ikw32 = kI * static_cast<double>(k) * w * 1.5;
    Complex hc = c / ikw32;
    Complex hp = alpha - 0.5;
    Complex acc = 0.0;
    double sign = 1.0;
    for (int m = 0; m < 4; ++m) {
        acc += sign * hc * std::exp(hp * std::log(T));
        hc = hc * hp / ikw32;
        hp -= 1.5;
        sign = -sign;
    }
    const Complex phase = std::exp(kI * static_cast<double>(k) * w * std::pow(T, 1.5));
    return -phase * acc;
}

} // namespace detail

// Integral over [T, inf) in the |t| variable of (H_series - smooth model).
// The smooth model terms ((k=0, j) -> coefficient) must be matched exactly by
// the series; a mismatch means the printed coefficient tables and the smooth
// primitive disagree, which is a hard error.
inline Complex tau_tail_integral(const TwoScaleSeries& H, double T,
                                 const std::map<int, Complex>& smooth_model) {
    TwoScaleSeries R = H;
    for (const auto& [j, c] : smooth_model) {
        auto it = R.terms.find({0, j});
        if (it == R.terms.end() || std::abs(it->second - c) > 1e-12 * (1.0 + std::abs(c)))
            throw IsotauError("tau_tail_integral: smooth part of H does not match the model");
        R.terms.erase(it);
    }
    const double w = (H.side == Side::MinusInf) ? 2.0 / 3.0 : 2.0 * std::sqrt(2.0) / 3.0;
    Complex total = 0.0;
    for (const auto& [kj, c] : R.terms) {
        if (std::abs(c) < 1e-28) continue;
        const auto [k, j] = kj;
        if (k == 0) {
            if (j <= 4) {
                // roundoff residue of an exact cancellation is tolerable,
                // a genuine non-integrable term is not
                if (std::abs(c) > 1e-11)
                    throw IsotauError("tau_tail_integral: non-integrable smooth remainder");
                continue;
            }
            total += c * std::pow(T, 1.0 - j / 4.0) / (j / 4.0 - 1.0);
        } else {
            const Complex alpha = (H.side == Side::MinusInf)
                ? 1.5 * static_cast<double>(k) * H.scale_exp - j / 4.0
                : -1.5 * static_cast<double>(k) * H.scale_exp - j / 4.0;
            total += detail::oscillatory_tail(c, alpha, k, w, T);
        }
    }
    return total;
}

} // namespace isotau::pii

#endif
