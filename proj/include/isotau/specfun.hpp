#ifndef ISOTAU_SPECFUN_HPP
#define ISOTAU_SPECFUN_HPP

#include <cmath>
#include <cstddef>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"

// Complex double-precision special functions on principal branches.
// Everything here is a pure function of its arguments.

namespace isotau::specfun {

namespace detail {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set). Relative accuracy of
// the resulting log-gamma is ~1e-14 on the right half plane.
inline constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,   -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,  12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

inline Complex log_gamma_lanczos(Complex z) {
    // valid for Re z > 0.5
    z -= 1.0;
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Complex(i, 0));
    Complex t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace detail

// Principal branch of ln Gamma(z), continuous on C minus (-inf, 0].
inline Complex log_gamma(Complex z) {
    if (dist_to_nonpos_int(z) < 1e-13)
        throw PoleError("log_gamma: nonpositive integer argument");
    if (z.real() > 0.5) return detail::log_gamma_lanczos(z);
    // reflection, with the unwound log-sin keeping the branch principal
    return std::log(kPi) - log_sin_pi(z) - detail::log_gamma_lanczos(1.0 - z);
}

inline Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

// digamma = d/dz log_gamma
inline Complex digamma(Complex z) {
    if (dist_to_nonpos_int(z) < 1e-13)
        throw PoleError("digamma: nonpositive integer argument");
    if (z.real() < 0.5)
        return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    Complex acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Stirling with Bernoulli numbers B2..B14
    static constexpr double b[7] = {1.0 / 6,  -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                    5.0 / 66, -691.0 / 2730, 7.0 / 6};
    Complex w = 1.0 / (z * z), s = std::log(z) - 0.5 / z, wp = w;
    for (int k = 0; k < 7; ++k) {
        s -= b[k] / (2.0 * (k + 1)) * wp;
        wp *= w;
    }
    return acc + s;
}

// Principal-branch ln G(z), Barnes G-function: G(z+1) = Gamma(z) G(z), G(1) = 1.
// Weierstrass-type series for ln G(1+w) with Re w >= 4, recurrence shift below.
inline Complex log_barnes_g(Complex z) {
    if (dist_to_nonpos_int(z) < 1e-12)
        throw PoleError("log_barnes_g: nonpositive integer argument");
    Complex shift = 0.0;
    // ln G(z) = ln G(z+1) - ln Gamma(z), applied until Re(z) - 1 >= 4
    while (z.real() < 5.0) {
        shift -= log_gamma(z);
        z += 1.0;
    }
    Complex w = z - 1.0;   // evaluate ln G(1+w), Re w >= 4
    constexpr double euler = 0.57721566490153286060651209008240243;
    Complex s = 0.5 * w * std::log(2.0 * kPi) - 0.5 * w * (w + 1.0) - 0.5 * euler * w * w;
    // sum_{k>=1} [w^2/(2k) - w + k ln(1+w/k)], tail via the log expansion and
    // Hurwitz-zeta-like sums accelerated with Euler-Maclaurin
    const double aw = std::abs(w);
    const std::size_t K = static_cast<std::size_t>(std::max(128.0, 8.0 * aw));
    for (std::size_t k = 1; k <= K; ++k) {
        double kd = static_cast<double>(k);
        s += w * w / (2.0 * kd) - w + kd * std::log(1.0 + w / kd);
    }
    // tail: sum_{k>K} sum_{j>=3} (-1)^{j+1} w^j / (j k^{j-1})
    //     = sum_{j>=3} (-1)^{j+1} (w^j / j) zeta(j-1, K+1)
    double N = static_cast<double>(K) + 1.0;
    Complex wp = w * w * w;
    for (int j = 3; j < 64; ++j) {
        // zeta(j-1, N) by Euler-Maclaurin: N^{2-j}/(j-2) + N^{1-j}/2 + (j-1) N^{-j}/12
        double sm = j - 1.0;
        double hz = std::pow(N, 1.0 - sm) / (sm - 1.0) + 0.5 * std::pow(N, -sm)
                  + sm / 12.0 * std::pow(N, -sm - 1.0)
                  - sm * (sm + 1.0) * (sm + 2.0) / 720.0 * std::pow(N, -sm - 3.0)
                  + sm * (sm + 1.0) * (sm + 2.0) * (sm + 3.0) * (sm + 4.0) / 30240.0
                    * std::pow(N, -sm - 5.0);
        Complex term = (j % 2 ? wp : -wp) / static_cast<double>(j) * hz;
        s += term;
        wp *= w;
        if (std::abs(term) < 1e-19 * (1.0 + std::abs(s))) break;
    }
    return s + shift;
}

// Ghat(z) = G(1+z)/G(1-z); satisfies Ghat(z+1)/Ghat(z) = -pi/sin(pi z).
inline Complex log_g_hat(Complex z) {
    return log_barnes_g(1.0 + z) - log_barnes_g(1.0 - z);
}

inline Complex g_hat(Complex z) { return std::exp(log_g_hat(z)); }

namespace detail {

inline Complex dilog_series(Complex z) {
    // |z| <= 1/2: plain series
    Complex s = 0.0, p = z;
    for (int k = 1; k < 80; ++k) {
        Complex term = p / static_cast<double>(k * k);
        s += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(s))) break;
        p *= z;
    }
    return s;
}

// Bernoulli series in w = -ln(1-z); converges for |w| < 2 pi, which covers
// the ring 0.5 < |z| <= 1 where neither the plain series nor the functional
// equations terminate.
inline Complex dilog_bernoulli(Complex z) {
    static constexpr double bern[25] = {
        1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30, 0.0,
        5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0, -3617.0 / 510, 0.0,
        43867.0 / 798, 0.0, -174611.0 / 330, 0.0, 854513.0 / 138, 0.0,
        -236364091.0 / 2730};
    const Complex w = -std::log(1.0 - z);
    Complex s = 0.0, wp = w;
    double fact = 1.0;
    for (int n = 0; n < 25; ++n) {
        fact *= (n + 1);
        if (bern[n] != 0.0) s += bern[n] * wp / fact;
        wp *= w;
    }
    return s;
}

} // namespace detail

// Dilogarithm Li2(z), principal branch, cut [1, inf).
inline Complex dilog(Complex z) {
    if (z.imag() == 0.0 && z.real() >= 1.0) {
        if (z.real() == 1.0) return kPi * kPi / 6.0;
        throw BranchCutError("dilog: argument on the cut [1,inf)");
    }
    constexpr double pi2_6 = kPi * kPi / 6.0;
    double az = std::abs(z);
    if (az <= 0.5) return detail::dilog_series(z);
    if (az > 1.0) {
        // inversion: Li2(z) = -pi^2/6 - ln^2(-z)/2 - Li2(1/z)
        Complex lnz = std::log(-z);
        return -pi2_6 - 0.5 * lnz * lnz - dilog(1.0 / z);
    }
    if (std::abs(1.0 - z) <= 0.5) {
        // Li2(z) = pi^2/6 - ln(z) ln(1-z) - Li2(1-z), inner argument small
        return pi2_6 - std::log(z) * std::log(1.0 - z) - detail::dilog_series(1.0 - z);
    }
    // the ring 0.5 < |z| <= 1 away from 1
    return detail::dilog_bernoulli(z);
}

namespace detail {

inline Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z) {
    Complex s = 1.0, term = 1.0;
    for (int n = 0; n < 1200; ++n) {
        double nd = n;
        term *= (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * z;
        s += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(s)) && n > 4) return s;
    }
    throw NonConvergenceError("hyp2f1: series did not converge");
}

inline Complex gamma_ratio(std::initializer_list<Complex> num,
                           std::initializer_list<Complex> den) {
    Complex s = 0.0;
    for (Complex u : num) s += log_gamma(u);
    for (Complex u : den) s -= log_gamma(u);
    return std::exp(s);
}

Complex hyp2f1_impl(Complex a, Complex b, Complex c, Complex z, int depth);

// connection z -> 1-z (needs c-a-b generic)
inline Complex hyp2f1_via_1mz(Complex a, Complex b, Complex c, Complex z, int depth) {
    Complex cab = c - a - b;
    if (dist_to_int(cab) < 1e-8)
        throw ParameterError("hyp2f1: c-a-b too close to an integer for the 1-z connection");
    Complex f1 = gamma_ratio({c, cab}, {c - a, c - b})
               * hyp2f1_impl(a, b, 1.0 - cab, 1.0 - z, depth + 1);
    Complex f2 = gamma_ratio({c, -cab}, {a, b}) * std::pow(1.0 - z, cab)
               * hyp2f1_impl(c - a, c - b, 1.0 + cab, 1.0 - z, depth + 1);
    return f1 + f2;
}

// connection z -> 1/z (needs a-b generic)
inline Complex hyp2f1_via_inv(Complex a, Complex b, Complex c, Complex z, int depth) {
    Complex ab = a - b;
    if (dist_to_int(ab) < 1e-8)
        throw ParameterError("hyp2f1: a-b too close to an integer for the 1/z connection");
    Complex f1 = gamma_ratio({c, -ab}, {b, c - a}) * std::pow(-z, -a)
               * hyp2f1_impl(a, 1.0 - c + a, 1.0 + ab, 1.0 / z, depth + 1);
    Complex f2 = gamma_ratio({c, ab}, {a, c - b}) * std::pow(-z, -b)
               * hyp2f1_impl(b, 1.0 - c + b, 1.0 - ab, 1.0 / z, depth + 1);
    return f1 + f2;
}

inline Complex hyp2f1_impl(Complex a, Complex b, Complex c, Complex z, int depth) {
    if (depth > 3) throw NonConvergenceError("hyp2f1: no usable transformation");
    if (z == Complex(0.0)) return 1.0;
    double az = std::abs(z);
    double apf = std::abs(z / (z - 1.0));
    if (az <= 0.75) return hyp2f1_series(a, b, c, z);
    if (apf <= 0.75) {
        // Pfaff: (1-z)^{-a} F(a, c-b; c; z/(z-1))
        return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, z / (z - 1.0));
    }
    if (std::abs(1.0 - z) <= 0.72) return hyp2f1_via_1mz(a, b, c, z, depth);
    if (az >= 1.3) return hyp2f1_via_inv(a, b, c, z, depth);
    // remaining sliver near |z|~1, |1-z|~1: 1-z connection with Pfaff inside
    return hyp2f1_via_1mz(a, b, c, z, depth);
}

} // namespace detail

// Gauss hypergeometric 2F1(a,b;c;z), principal branch.
inline Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
    if (dist_to_nonpos_int(c) < 1e-10)
        throw ParameterError("hyp2f1: c is a nonpositive integer");
    return detail::hyp2f1_impl(a, b, c, z, 0);
}

} // namespace isotau::specfun

#endif
