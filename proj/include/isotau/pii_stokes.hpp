#ifndef ISOTAU_PII_STOKES_HPP
#define ISOTAU_PII_STOKES_HPP

#include <cmath>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"

// Painleve II Stokes data on the cubic s1 - s2 + s3 + s1 s2 s3 = 0 and the
// derived asymptotic exponents (mu, nu, eta, rho) of the two tau tails.

namespace isotau::pii {

struct PIIStokes {
    Complex s1, s2, s3;

    // (s1, s2) chart on the cubic
    static PIIStokes from_s1s2(Complex s1, Complex s2) {
        PIIStokes s;
        s.s1 = s1;
        s.s2 = s2;
        s.s3 = (s2 - s1) / (1.0 + s1 * s2);
        return s;
    }

    Complex cubic_residual() const { return s1 - s2 + s3 + s1 * s2 * s3; }
};

inline void require_on_cubic(const PIIStokes& s, double tol = 1e-12) {
    if (std::abs(s.cubic_residual()) > tol)
        throw GenericityError("PIIStokes: cubic relation violated");
}

inline void require_generic(const PIIStokes& s) {
    require_on_cubic(s);
    const Complex q = 1.0 - s.s1 * s.s3;
    if (std::abs(q) < 1e-12) throw GenericityError("PIIStokes: s1 s3 = 1");
    if (std::abs(std::arg(q)) >= kPi - 1e-12)
        throw GenericityError("PIIStokes: arg(1 - s1 s3) outside (-pi, pi)");
    if (std::abs(s.s2.imag()) < 1e-12)
        throw GenericityError("PIIStokes: s2 real (solution not smooth at +inf)");
}

struct PIIExponents {
    Complex mu, nu, eta, rho;
    int sgn;   // +-1, sign of Re(i s2)
};

inline PIIExponents exponents_from_stokes(const PIIStokes& s) {
    require_generic(s);
    PIIExponents e;
    e.mu = -std::log(1.0 - s.s1 * s.s3) / (2.0 * kPi * kI);
    e.sgn = ((kI * s.s2).real() > 0.0) ? 1 : -1;
    e.nu = std::log(kI * static_cast<double>(e.sgn) * s.s2) / (kPi * kI);
    const Complex etaTilde = -std::log(s.s3) / (kI * kPi);
    e.eta = etaTilde - 0.5 * static_cast<double>(e.sgn);
    e.rho = -std::log(1.0 + s.s1 * s.s2) / (kI * kPi);
    return e;
}

// residuals of the defining relations and the two sine identities (eq-level
// consistency of the exponent chart; all should vanish for generic data)
struct ExponentResiduals {
    double defs;     // exps of mu, nu, eta, rho vs Stokes data
    double murho;    // cubic-induced relation between mu, rho and (nu, eta)
    double trigo;    // the two sine identities
};

inline ExponentResiduals exponent_residuals(const PIIStokes& s, const PIIExponents& e) {
    ExponentResiduals r{};
    const double sg = e.sgn;
    r.defs = std::abs(std::exp(-2.0 * kPi * kI * e.mu) - (1.0 - s.s1 * s.s3))
           + std::abs(std::exp(kI * kPi * e.nu) - kI * sg * s.s2)
           + std::abs(std::exp(kI * kPi * (e.eta + 0.5 * sg)) - 1.0 / s.s3)
           + std::abs(std::exp(kI * kPi * e.rho) - 1.0 / (1.0 + s.s1 * s.s2));
    r.murho = std::abs(std::exp(-2.0 * kPi * kI * e.mu) * (1.0 - std::exp(kI * kPi * (e.nu - e.eta)))
                       - (1.0 - std::exp(-2.0 * kPi * kI * e.eta)))
            + std::abs(std::exp(-kI * kPi * e.rho) * (1.0 - std::exp(kI * kPi * (e.nu - e.eta)))
                       - (1.0 - std::exp(2.0 * kPi * kI * e.nu)));
    r.trigo = std::abs(std::exp(kI * kPi * (4.0 * e.mu - e.eta - e.nu) / 2.0)
                       - std::sin(kPi * (e.eta - e.nu) / 2.0) / std::sin(kPi * e.eta))
            + std::abs(std::exp(kI * kPi * (2.0 * e.rho + e.eta + e.nu) / 2.0)
                       - std::sin(kPi * (e.nu - e.eta) / 2.0) / std::sin(kPi * e.nu));
    return r;
}

} // namespace isotau::pii

#endif
