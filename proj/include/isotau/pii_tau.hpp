#ifndef ISOTAU_PII_TAU_HPP
#define ISOTAU_PII_TAU_HPP

#include <cmath>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/pii_stokes.hpp"
#include "isotau/specfun.hpp"

// Closed-form connection coefficient of the PII tau function and the
// quasi-periodic constant chi of its Fourier-type representations.

namespace isotau::pii {

// zeta'(-1) = 1/12 - ln A (Glaisher-Kinkelin)
inline constexpr double kZetaPrimeMinus1 = -0.16542114370045092921391966024278065;

// Upsilon_0 = 2^{1/24} e^{zeta'(-1) + i pi/24}
inline Complex upsilon0_pii() {
    return std::exp(std::log(2.0) / 24.0 + kZetaPrimeMinus1 + kI * kPi / 24.0);
}

// |Upsilon_0|: the Hastings-McLeod constant 2^{1/24} e^{zeta'(-1)}
inline double upsilon_hm_constant() {
    return std::exp(std::log(2.0) / 24.0 + kZetaPrimeMinus1);
}

inline Complex log_upsilon_pii_closed(const PIIExponents& e) {
    using specfun::log_barnes_g;
    using specfun::log_g_hat;
    const Complex mu = e.mu, nu = e.nu, eta = e.eta;
    return std::log(2.0) / 24.0 + kZetaPrimeMinus1 + kI * kPi / 24.0
         + (3.0 * mu * mu - 1.75 * nu * nu) * std::log(2.0)
         + (-mu - 0.5 * nu) * std::log(2.0 * kPi)
         + kI * kPi / 4.0 * (eta * eta + 2.0 * mu * mu + 2.0 * eta * nu - 8.0 * mu * eta)
         + log_barnes_g(1.0 - nu) + log_g_hat(eta)
         - 2.0 * log_barnes_g(1.0 - mu) - 2.0 * log_g_hat((eta - nu) / 2.0);
}

inline Complex upsilon_pii_closed(const PIIStokes& s) {
    return std::exp(log_upsilon_pii_closed(exponents_from_stokes(s)));
}

// chi as a function of (nu_minus, nu_plus; eta); nu_minus = -mu, nu_plus = nu
// for the chi attached to given Stokes data.
inline Complex chi_value(Complex nuM, Complex nuP, Complex eta) {
    using specfun::log_g_hat;
    return std::exp(std::log(2.0) / 24.0 + kZetaPrimeMinus1 + kI * kPi / 24.0
                    + (nuM - 0.5 * nuP) * std::log(2.0 * kPi)
                    + kI * kPi * ((eta + nuP) * (eta + nuP) / 4.0 + nuM * nuM + 2.0 * nuM * eta)
                    + log_g_hat(eta) - log_g_hat(nuP) - 2.0 * log_g_hat((eta - nuP) / 2.0));
}

struct ChiResult {
    Complex chi;
    double residualMinus;   // chi(nuM+1, nuP; eta) e^{i rho_-} vs chi
    double residualPlus;    // chi(nuM, nuP+1; eta+1) e^{-i rho_+} vs chi
};

inline ChiResult chi_and_periodicity(const PIIStokes& s) {
    const PIIExponents e = exponents_from_stokes(s);
    const Complex nuM = -e.mu, nuP = e.nu;
    ChiResult r;
    r.chi = chi_value(nuM, nuP, e.eta);
    const Complex expRhoM = s.s3 * s.s3 / (2.0 * kPi * (1.0 - s.s1 * s.s3));
    const Complex expRhoP = (1.0 + s.s1 * s.s2) / std::sqrt(2.0 * kPi);
    r.residualMinus = std::abs(chi_value(nuM + 1.0, nuP, e.eta) * expRhoM - r.chi)
                    / std::abs(r.chi);
    r.residualPlus = std::abs(chi_value(nuM, nuP + 1.0, e.eta + 1.0) / expRhoP - r.chi)
                   / std::abs(r.chi);
    return r;
}

// the Barnes prefactor relating Upsilon to chi
inline Complex upsilon_over_chi(const PIIExponents& e) {
    using specfun::log_barnes_g;
    const Complex nuM = -e.mu, nuP = e.nu;
    return std::exp((3.0 * nuM * nuM - 1.75 * nuP * nuP) * std::log(2.0)
                    - kI * kPi * (nuP * nuP + 2.0 * nuM * nuM) / 4.0
                    + log_barnes_g(1.0 + nuP) - 2.0 * log_barnes_g(1.0 + nuM));
}

// Experimental: leading Fourier-block evaluators of the conjectural series
// representations (printed B1, B2 / D1, D2 only). Not used by any
// verification path.
inline Complex fourier_block_minus(Complex alpha, double t) {
    if (t >= 0.0) throw ValidityError("fourier_block_minus: t must be negative");
    const double r = 4.0 / 3.0 * std::pow(-t, 1.5);
    const Complex B1 = -kI * alpha * (34.0 * alpha * alpha + 1.0) / 18.0;
    const Complex B2 = -alpha * alpha
        * (1156.0 * alpha * alpha * alpha * alpha + 2318.0 * alpha * alpha + 271.0) / 648.0;
    return std::exp(-alpha * alpha * std::log(6.0) + kI * kPi * alpha * alpha / 2.0
                    + 2.0 * specfun::log_barnes_g(1.0 + alpha)
                    - alpha * alpha * std::log(r) + kI * alpha * r)
         * (1.0 + B1 / r + B2 / (r * r));
}

inline Complex fourier_block_plus(Complex alpha, double t) {
    if (t <= 0.0) throw ValidityError("fourier_block_plus: t must be positive");
    const double r = 2.0 * std::sqrt(2.0) / 3.0 * std::pow(t, 1.5);
    const Complex a2 = alpha * alpha;
    const Complex D1 = -kI * alpha * (34.0 * a2 + 31.0) / 72.0;
    const Complex D2 = -289.0 / 2592.0 * a2 * a2 * a2 - 413.0 / 648.0 * a2 * a2
                     - 11509.0 / 10368.0 * a2 - 1.0 / 24.0;
    return std::exp(-0.5 * a2 * std::log(12.0) - kI * kPi * a2 / 4.0
                    + specfun::log_barnes_g(1.0 + alpha)
                    - 0.5 * a2 * std::log(r) + kI * alpha * r)
         * (1.0 + D1 / r + D2 / (r * r));
}

} // namespace isotau::pii

#endif
