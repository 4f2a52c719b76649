#ifndef ISOTAU_COMPLEX_UTIL_HPP
#define ISOTAU_COMPLEX_UTIL_HPP

#include <cmath>
#include <complex>
#include <numbers>

namespace isotau {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// distance from z to the nearest integer on the real axis
inline double dist_to_int(Complex z) {
    double r = z.real() - std::round(z.real());
    return std::hypot(r, z.imag());
}

// distance to the nearest nonpositive integer {0,-1,-2,...}
inline double dist_to_nonpos_int(Complex z) {
    if (z.real() > 0.5) return std::hypot(z.real(), z.imag());
    return dist_to_int(z);
}

inline Complex expi(double x) { return {std::cos(x), std::sin(x)}; }

// principal power t^a for real t > 0
inline Complex pow_pos(double t, Complex a) {
    return std::exp(a * std::log(t));
}

// log(sin(pi z)) continuous off the real integer lattice, real on (0,1).
// Factoring out the dominant exponential keeps it stable for large |Im z|.
inline Complex log_sin_pi(Complex z) {
    if (z.imag() >= 0.0) {
        // sin(pi z) = e^{-i pi z} (i/2) (1 - e^{2 pi i z})
        return -kI * kPi * z + Complex(0.0, kPi / 2) - std::log(2.0)
             + std::log(1.0 - std::exp(2.0 * kPi * kI * z));
    }
    return kI * kPi * z - Complex(0.0, kPi / 2) - std::log(2.0)
         + std::log(1.0 - std::exp(-2.0 * kPi * kI * z));
}

} // namespace isotau

#endif
