#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "isotau/pii_stokes.hpp"
#include "isotau/pii_tau.hpp"
#include "test_helpers.hpp"

using namespace isotau;
using namespace isotau::pii;
using isotau::testing::random_generic_stokes;
using Catch::Approx;

namespace {

PIIStokes default_stokes() {
    // s1 = s3 = 0.1i on the cubic
    return PIIStokes::from_s1s2({0.0, 0.1}, {0.0, 0.2 / 1.01});
}

const Complex kMu{0.0, 0.00158364434068149658989};
const Complex kNu{0.0, 0.5154672874081391406561};
const Complex kEta{0.0, -0.7329355988794277408728};
const Complex kRho{0.0, -0.006366409942999907599447};
const Complex kUpsilonDefault{1.4576116941997979537, 0.0};
const Complex kUpsilon2{1.048696724128356735901, -0.03923543101290312795735};
const Complex kUpsilon0{0.8649081565656697839612, 0.1138673189955808363363};

} // namespace

TEST_CASE("cubic closure and the (s1, s2) chart") {
    PIIStokes s = default_stokes();
    CHECK(std::abs(s.cubic_residual()) < 1e-15);
    CHECK(std::abs(s.s3 - Complex(0.0, 0.1)) < 1e-15);
    for (int i = 0; i < 100; ++i)
        CHECK(std::abs(random_generic_stokes().cubic_residual()) < 1e-12);
}

TEST_CASE("genericity guards") {
    // s2 real -> not smooth at +inf
    CHECK_THROWS_AS(require_generic(PIIStokes::from_s1s2({0.1, 0.0}, {0.2, 0.0})),
                    GenericityError);
    // s1 s3 = 1 via s1 = i, s3 = -i... build directly
    PIIStokes bad;
    bad.s1 = {0.0, 1.0};
    bad.s2 = {0.0, 0.5};
    bad.s3 = (bad.s2 - bad.s1) / (1.0 + bad.s1 * bad.s2);
    // s1*s3 = i * (−0.5i/…): compute and only assert when it is actually 1
    if (std::abs(1.0 - bad.s1 * bad.s3) < 1e-12)
        CHECK_THROWS_AS(require_generic(bad), GenericityError);
}

TEST_CASE("exponents for the default data") {
    PIIStokes s = default_stokes();
    PIIExponents e = exponents_from_stokes(s);
    CHECK(e.sgn == -1);
    CHECK(std::abs(e.mu - kMu) < 1e-15);
    CHECK(std::abs(e.nu - kNu) < 1e-14);
    CHECK(std::abs(e.eta - kEta) < 1e-14);
    CHECK(std::abs(e.rho - kRho) < 1e-15);
    ExponentResiduals r = exponent_residuals(s, e);
    CHECK(r.defs < 1e-13);
    CHECK(r.murho < 1e-13);
    CHECK(r.trigo < 1e-10);
}

TEST_CASE("s1 = s3 = 0.1i: purely imaginary mu and nu") {
    PIIStokes s = default_stokes();
    PIIExponents e = exponents_from_stokes(s);
    CHECK(std::abs(e.mu.real()) < 1e-15);
    CHECK(std::abs(e.nu.real()) < 1e-15);
    // s2 from the cubic
    CHECK(std::abs(s.s2 - Complex(0.0, 0.2 / 1.01)) < 1e-15);
}

TEST_CASE("s1 s3 -> 0 sends mu -> 0") {
    PIIStokes s = PIIStokes::from_s1s2({0.0, 0.0}, {0.0, 0.15});
    PIIExponents e = exponents_from_stokes(s);
    CHECK(std::abs(e.mu) < 1e-12);   // s1 = 0 exactly
}

TEST_CASE("rotated Hastings-McLeod data (0, -i, -i)") {
    PIIStokes s;
    s.s1 = {0.0, 0.0};
    s.s2 = {0.0, -1.0};
    s.s3 = {0.0, -1.0};
    CHECK(std::abs(s.cubic_residual()) < 1e-15);
    PIIExponents e = exponents_from_stokes(s);
    CHECK(e.sgn == 1);
    CHECK(std::abs(e.mu) < 1e-14);
    CHECK(std::abs(e.nu) < 1e-14);
    CHECK(std::abs(e.eta) < 1e-14);
}

TEST_CASE("exponent residuals over random generic data") {
    for (int i = 0; i < 100; ++i) {
        PIIStokes s = random_generic_stokes();
        PIIExponents e = exponents_from_stokes(s);
        ExponentResiduals r = exponent_residuals(s, e);
        CHECK(r.defs < 1e-12);
        CHECK(r.murho < 1e-10);
        CHECK(r.trigo < 1e-10);
    }
}

TEST_CASE("closed-form upsilon at the frozen points") {
    CHECK(std::abs(upsilon_pii_closed(default_stokes()) - kUpsilonDefault) < 1e-12);
    PIIStokes s2 = PIIStokes::from_s1s2({0.12, 0.06}, {-0.05, 0.35});
    CHECK(std::abs(upsilon_pii_closed(s2) - kUpsilon2) < 1e-12);
}

TEST_CASE("upsilon at mu = nu = eta = 0 is Upsilon_0") {
    PIIStokes s;
    s.s1 = {0.0, 0.0};
    s.s2 = {0.0, -1.0};
    s.s3 = {0.0, -1.0};
    Complex u = upsilon_pii_closed(s);
    CHECK(std::abs(u - kUpsilon0) < 1e-12);
    CHECK(std::abs(u.real() - 0.865) < 5e-4);
    CHECK(std::abs(u.imag() - 0.114) < 5e-4);
    CHECK(std::abs(std::abs(u) - upsilon_hm_constant()) < 1e-12);
}

TEST_CASE("eta shift by 2 re-expressed through the Ghat recursion") {
    // evaluating the closed form with eta+2 and compensating by the exact
    // recursion factors must reproduce the same value
    PIIStokes s = random_generic_stokes();
    PIIExponents e = exponents_from_stokes(s);
    PIIExponents es = e;
    es.eta = e.eta + 2.0;
    Complex u = std::exp(log_upsilon_pii_closed(e));
    Complex us = std::exp(log_upsilon_pii_closed(es));
    // Ghat(eta+2)/Ghat(eta) = pi^2 / (sin(pi eta) sin(pi(eta+1)))
    //                       = -pi^2 / sin^2(pi eta)
    Complex ghat_fac = -kPi * kPi / (std::sin(kPi * e.eta) * std::sin(kPi * e.eta));
    // Ghat((eta-nu)/2 + 1)/Ghat((eta-nu)/2) = -pi / sin(pi (eta-nu)/2)
    Complex ghat_half = -kPi / std::sin(kPi * (e.eta - e.nu) / 2.0);
    Complex exp_fac = std::exp(kI * kPi / 4.0
                               * ((es.eta * es.eta - e.eta * e.eta)
                                  + 2.0 * (es.eta - e.eta) * e.nu
                                  - 8.0 * e.mu * (es.eta - e.eta)));
    Complex predicted = u * exp_fac * ghat_fac / (ghat_half * ghat_half);
    CHECK(std::abs(us - predicted) < 1e-11 * std::abs(us));
}

TEST_CASE("experimental Fourier blocks evaluate finitely") {
    PIIStokes s = default_stokes();
    PIIExponents e = exponents_from_stokes(s);
    Complex B = fourier_block_minus(-e.mu, -50.0);
    Complex D = fourier_block_plus(e.nu, 50.0);
    CHECK(std::isfinite(std::abs(B)));
    CHECK(std::isfinite(std::abs(D)));
    CHECK_THROWS_AS(fourier_block_minus(-e.mu, 50.0), ValidityError);
    CHECK_THROWS_AS(fourier_block_plus(e.nu, -50.0), ValidityError);
}

TEST_CASE("chi quasi-periodicity and the Upsilon relation") {
    for (int i = 0; i < 100; ++i) {
        PIIStokes s = random_generic_stokes();
        ChiResult r = chi_and_periodicity(s);
        CHECK(r.residualMinus < 1e-10);
        CHECK(r.residualPlus < 1e-10);
    }
    PIIStokes s = default_stokes();
    PIIExponents e = exponents_from_stokes(s);
    ChiResult r = chi_and_periodicity(s);
    Complex lhs = upsilon_pii_closed(s) / r.chi;
    CHECK(std::abs(lhs - upsilon_over_chi(e)) < 1e-11 * std::abs(lhs));
}
