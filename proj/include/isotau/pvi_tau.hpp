#ifndef ISOTAU_PVI_TAU_HPP
#define ISOTAU_PVI_TAU_HPP

#include <array>
#include <cmath>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/pvi_monodromy.hpp"
#include "isotau/pvi_parametrix.hpp"
#include "isotau/specfun.hpp"

// Closed-form short-distance expansions of the PVI tau function at t = 0 and
// t = 1, and the connection constant Upsilon(M) between the two normalizations.

namespace isotau::pvi {

struct TauExpansion {
    Complex exponent;      // sigma^2 - theta0^2 - thetat^2 (or barred analog)
    Complex coeffPlus;     // multiplies kappa^{+1} t^{1+2 sigma}
    Complex coeffMinus;    // multiplies kappa^{-1} t^{1-2 sigma}
    Complex coeffLinear;   // multiplies t
    Complex kappa;
    Complex sigma;

    // bracket [...] of the expansion at argument x (= t, resp. 1-t)
    Complex bracket(double x) const {
        return 1.0 - coeffPlus * kappa * pow_pos(x, 1.0 + 2.0 * sigma)
             - coeffMinus / kappa * pow_pos(x, 1.0 - 2.0 * sigma) + coeffLinear * x;
    }
    Complex log_bracket(double x) const { return std::log(bracket(x)); }
};

namespace detail {

// expansion coefficients as functions of (thA, thB, thC, thD, sigma):
// at t=0 the roles are (theta0, thetat, theta1, thetaInf); at t=1 the
// crossing swaps theta0 <-> theta1 and sigma -> sigma-bar.
inline TauExpansion expansion_from(Complex thA, Complex thB, Complex thC, Complex thD,
                                   Complex sg, Complex kappa) {
    if (std::abs(sg) < 1e-12) throw DegenerateError("tau expansion: sigma = 0");
    TauExpansion e;
    e.exponent = sg * sg - thA * thA - thB * thB;
    e.sigma = sg;
    e.kappa = kappa;
    auto coeff = [&](double epsv) {
        Complex es = epsv * sg;
        return ((thB - es) * (thB - es) - thA * thA) * ((thC - es) * (thC - es) - thD * thD)
             / (4.0 * sg * sg * (1.0 + 2.0 * es) * (1.0 + 2.0 * es));
    };
    e.coeffPlus = coeff(+1.0);
    e.coeffMinus = coeff(-1.0);
    e.coeffLinear = (sg * sg - thD * thD + thC * thC) * (sg * sg - thA * thA + thB * thB)
                  / (2.0 * sg * sg);
    return e;
}

inline Complex kappa_formula(Complex thA, Complex thB, Complex thC, Complex thD,
                             Complex sg, Complex expEta) {
    using specfun::log_gamma;
    Complex s = 2.0 * log_gamma(1.0 - 2.0 * sg) - 2.0 * log_gamma(1.0 + 2.0 * sg)
              + log_gamma(1.0 + thA + thB + sg) - log_gamma(1.0 + thA + thB - sg)
              + log_gamma(1.0 - thA + thB + sg) - log_gamma(1.0 - thA + thB - sg)
              + log_gamma(1.0 + thD + thC + sg) - log_gamma(1.0 + thD + thC - sg)
              + log_gamma(1.0 - thD + thC + sg) - log_gamma(1.0 - thD + thC - sg);
    return std::exp(s) * expEta;
}

} // namespace detail

inline Complex kappa_from_monodromy(const PVIMonodromy& m) {
    return detail::kappa_formula(m.theta.theta0, m.theta.thetat, m.theta.theta1,
                                 m.theta.thetaInf, m.sigma, m.expEta);
}

inline Complex kappa_bar_from_monodromy(const PVIMonodromy& m, const CrossedMonodromy& cr) {
    return detail::kappa_formula(m.theta.theta1, m.theta.thetat, m.theta.theta0,
                                 m.theta.thetaInf, cr.sigmaBar, cr.expEtaBar);
}

inline TauExpansion tau_expansion_zero(const PVIMonodromy& m) {
    return detail::expansion_from(m.theta.theta0, m.theta.thetat, m.theta.theta1,
                                  m.theta.thetaInf, m.sigma, kappa_from_monodromy(m));
}

inline TauExpansion tau_expansion_one(const PVIMonodromy& m) {
    CrossedMonodromy cr = crossing(m);
    return detail::expansion_from(m.theta.theta1, m.theta.thetat, m.theta.theta0,
                                  m.theta.thetaInf, cr.sigmaBar,
                                  kappa_bar_from_monodromy(m, cr));
}

struct UpsilonIngredients {
    std::array<Complex, 4> nu, lambda;
    Complex nuSigma;
    Complex xi, varsigma;
};

inline UpsilonIngredients upsilon_ingredients(const PVIMonodromy& m, const CrossedMonodromy& cr,
                                              const TraceFunctions& tr) {
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    const Complex sg = m.sigma, sb = cr.sigmaBar;
    UpsilonIngredients g;
    g.nu = {sg + th0 + tht, sg + th1 + thI, sb + th0 + thI, sb + tht + th1};
    g.lambda = {th0 + tht + th1 + thI, sg + sb + th0 + th1, sg + sb + tht + thI, 0.0};
    g.nuSigma = (g.nu[0] + g.nu[1] + g.nu[2] + g.nu[3]) / 2.0;
    Complex num = 2.0 * std::cos(2.0 * kPi * (sg - sb)) - 2.0 * std::cos(2.0 * kPi * (th0 + th1))
                - 2.0 * std::cos(2.0 * kPi * (thI + tht)) + tr.p01;
    Complex den = 0.0;
    for (int k = 0; k < 4; ++k)
        den += std::exp(2.0 * kPi * kI * (g.nuSigma - g.nu[k]))
             - std::exp(2.0 * kPi * kI * (g.nuSigma - g.lambda[k]));
    g.xi = num / den;
    g.varsigma = std::log(g.xi) / (2.0 * kPi * kI);
    return g;
}

// residual of the quadratic selecting the nontrivial roots of eq-quadreq
inline Complex quadreq_residual(const UpsilonIngredients& g) {
    Complex lhs = 1.0, rhs = 1.0;
    for (int k = 0; k < 4; ++k) {
        lhs *= 1.0 - g.xi * std::exp(2.0 * kPi * kI * g.nu[k]);
        rhs *= 1.0 - g.xi * std::exp(2.0 * kPi * kI * g.lambda[k]);
    }
    return lhs - rhs;
}

// log of the Ghat product, with an integer shift of varsigma (shift-invariant
// by the cyclic identity; exposed for the invariance test)
inline Complex log_ghat_product(const UpsilonIngredients& g, int shift = 0) {
    Complex s = 0.0;
    const Complex vs = g.varsigma + static_cast<double>(shift);
    for (int k = 0; k < 4; ++k)
        s += specfun::log_g_hat(vs + g.nu[k]) - specfun::log_g_hat(vs + g.lambda[k]);
    return s;
}

// log of the Barnes-G prefactor relating Upsilon to the Ghat product
inline Complex log_barnes_prefactor(const PVIMonodromy& m, const CrossedMonodromy& cr) {
    using specfun::log_barnes_g;
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    const Complex sg = m.sigma, sb = cr.sigmaBar;
    Complex s = 0.0;
    for (double e : {1.0, -1.0}) {
        for (double ep : {1.0, -1.0}) {
            s += log_barnes_g(1.0 + e * sb + ep * tht - e * ep * th1);
            s += log_barnes_g(1.0 + e * sb + ep * th0 - e * ep * thI);
            s -= log_barnes_g(1.0 + e * sg + ep * tht + e * ep * th0);
            s -= log_barnes_g(1.0 + e * sg + ep * th1 + e * ep * thI);
        }
        s += log_barnes_g(1.0 + 2.0 * e * sg) - log_barnes_g(1.0 + 2.0 * e * sb);
    }
    return s;
}

struct UpsilonResult {
    Complex upsilon;
    Complex sigmaBar;
    Complex varsigma;
};

// Connection constant Upsilon(M) of the PVI tau function (closed form).
inline UpsilonResult upsilon_pvi(const PVIMonodromy& m) {
    const CrossedMonodromy cr = crossing(m);
    const TraceFunctions tr = traces_from_darboux(m);
    const UpsilonIngredients g = upsilon_ingredients(m, cr, tr);
    Complex logU = log_barnes_prefactor(m, cr) + log_ghat_product(g);
    return {std::exp(logU), cr.sigmaBar, g.varsigma};
}

// ---- the closed 1-form of the monodromy dependence (d_M ln Upsilon-hat) ----

// coefficients c12 = alpha, c22 = e^{-2 pi i sigma-bar} - beta of the
// invariant part of the transition matrix between the t->0 and t->1 charts
inline std::pair<Complex, Complex> css_coefficients(const PVIMonodromy& m,
                                                    const CrossedMonodromy& cr,
                                                    const TraceFunctions& tr) {
    const Complex sg = m.sigma, th1 = m.theta.theta1, tht = m.theta.thetat;
    const Complex e2s = std::exp(2.0 * kPi * kI * sg);
    const Complex s2 = 4.0 * std::sin(2.0 * kPi * sg) * std::sin(2.0 * kPi * sg);
    const Complex alpha = ((tr.pInf - 2.0 * std::cos(2.0 * kPi * (th1 + sg))) * (tr.p0 * e2s - tr.pt)
                         - (tr.p0 - 2.0 * std::cos(2.0 * kPi * (tht - sg)))
                           * (tr.pInf * e2s - tr.p1) * m.expEta) / s2;
    const Complex beta = ((tr.pt * e2s - tr.p0) * (tr.p1 / e2s - tr.pInf)
                        - (tr.p0 - 2.0 * std::cos(2.0 * kPi * (tht + sg)))
                          * (tr.pInf - 2.0 * std::cos(2.0 * kPi * (th1 + sg))) / m.expEta) / s2;
    return {alpha, std::exp(-2.0 * kPi * kI * cr.sigmaBar) - beta};
}

// the six multiplicative composites F_A..F_F whose logarithmic differentials,
// weighted by (sigma-bar, -sigma, thetaInf, theta1, thetat, theta0), assemble
// d_M ln Upsilon-hat
inline std::array<Complex, 6> upshat_composites(const PVIMonodromy& m) {
    const CrossedMonodromy cr = crossing(m);
    const TraceFunctions tr = traces_from_darboux(m);
    auto [c12, c22] = css_coefficients(m, cr, tr);
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    const Complex sg = m.sigma, sb = cr.sigmaBar, ee = m.expEta;
    auto sp = [](Complex x) { return std::sin(kPi * x); };
    auto cs = [](Complex x) { return std::cos(2.0 * kPi * x); };
    auto e2 = [](Complex x) { return std::exp(2.0 * kPi * kI * x); };
    const Complex eps = std::exp(-kPi * kI * sg), epp = std::exp(kPi * kI * sg);
    std::array<Complex, 6> F;
    F[0] = sp(th0 - thI - sb) * sp(th1 - tht + sb)
         / (sp(th0 + thI + sb) * sp(th1 + tht + sb)) * cr.expEtaBar;
    F[1] = sp(th0 + tht - sg) * sp(th1 + thI - sg)
         / (sp(th0 - tht - sg) * sp(th1 - thI + sg)) * ee;
    F[2] = sp(th1 + thI - sg) * sp(th0 - thI - sb) / (sp(th1 - thI + sg) * sp(th0 - thI + sb))
         * (c12 * sp(th1 - thI - sg) - c22 * sp(th1 - thI + sg))
         / (c12 * sp(th1 + thI - sg) - c22 * sp(th1 + thI + sg)) / e2(thI);
    F[3] = sp(th1 + tht - sb) / sp(th1 + tht + sb) * e2(th1)
         * (cs(th1) - cs(thI - sg)) * (c12 * eps - c22 * epp)
         / (c12 * eps * (cs(th1 - sg) - cs(thI)) - c22 * epp * (cs(th1 + sg) - cs(thI)));
    F[4] = sp(th1 + tht - sb) / sp(th1 + tht + sb) / e2(tht)
         * (cs(tht) - cs(th0 - sg)) * (c12 * eps - c22 * epp * ee)
         / (c12 * eps * (cs(tht + sg) - cs(th0)) - c22 * epp * ee * (cs(tht - sg) - cs(th0)));
    F[5] = sp(th0 + tht - sg) * sp(th0 - thI + sb) / (sp(th0 - tht - sg) * sp(th0 - thI - sb))
         * (c12 * sp(th0 - tht - sg) - c22 * ee * sp(th0 - tht + sg))
         / (c12 * sp(th0 + tht + sg) - c22 * ee * sp(th0 + tht - sg)) * e2(th0);
    return F;
}

} // namespace isotau::pvi

#endif
