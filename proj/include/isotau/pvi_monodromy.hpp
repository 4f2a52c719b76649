#ifndef ISOTAU_PVI_MONODROMY_HPP
#define ISOTAU_PVI_MONODROMY_HPP

#include <array>
#include <cmath>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/mat2.hpp"

// Painleve VI monodromy data: Darboux coordinates (sigma, eta) on the
// 4-punctured-sphere character variety, trace functions, and the crossing
// map that exchanges the roles of the critical points t = 0 and t = 1.

namespace isotau::pvi {

struct ThetaData {
    Complex theta0, thetat, theta1, thetaInf;
};

struct TraceFunctions {
    Complex p0, pt, p1, pInf;   // p_nu = 2 cos 2 pi theta_nu
    Complex p0t, pt1, p01;      // p_{mu nu} = Tr M_mu M_nu
};

struct PVIMonodromy {
    ThetaData theta;
    Complex sigma;
    Complex eta;       // defined mod 2 pi; only exp(i eta) enters any formula
    Complex expEta;

    PVIMonodromy(ThetaData th, Complex sg, Complex et, double genericity_tol = 1e-9)
        : theta(th), sigma(sg), eta(et), expEta(std::exp(kI * et)) {
        if (std::abs(sg) < genericity_tol)
            throw GenericityError("PVIMonodromy: sigma = 0");
        if (std::abs(sg.real()) >= 0.5)
            throw GenericityError("PVIMonodromy: |Re sigma| >= 1/2");
        const Complex th0 = th.theta0, tht = th.thetat, th1 = th.theta1, thI = th.thetaInf;
        const std::array<Complex, 8> combos = {
            th0 + tht + sg, th0 + tht - sg, th0 - tht + sg, th0 - tht - sg,
            thI + th1 + sg, thI + th1 - sg, thI - th1 + sg, thI - th1 - sg};
        for (Complex c : combos)
            if (dist_to_int(c) < genericity_tol)
                throw GenericityError("PVIMonodromy: theta/sigma combination too close to an integer");
    }
};

struct CrossedMonodromy {
    Complex sigmaBar;
    Complex etaBar;       // principal value of -i log(expEtaBar)
    Complex expEtaBar;
    TraceFunctions tracesBar;
};

inline TraceFunctions traces_from_darboux(const PVIMonodromy& m) {
    const Complex sg = m.sigma;
    if (std::abs(std::sin(2.0 * kPi * sg)) < 1e-12)
        throw DegenerateError("traces_from_darboux: sin 2 pi sigma vanishes");
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    TraceFunctions tr;
    tr.p0 = 2.0 * std::cos(2.0 * kPi * th0);
    tr.pt = 2.0 * std::cos(2.0 * kPi * tht);
    tr.p1 = 2.0 * std::cos(2.0 * kPi * th1);
    tr.pInf = 2.0 * std::cos(2.0 * kPi * thI);
    tr.p0t = 2.0 * std::cos(2.0 * kPi * sg);
    const Complex den = 4.0 - tr.p0t * tr.p0t;
    Complex s1 = 0.0, s2 = 0.0;
    for (double eps : {1.0, -1.0}) {
        Complex f = (tr.pInf - 2.0 * std::cos(2.0 * kPi * (th1 - eps * sg)))
                  * (tr.p0 - 2.0 * std::cos(2.0 * kPi * (tht - eps * sg)));
        Complex ph = std::pow(m.expEta, eps);
        s1 += f * ph;
        s2 += f * ph * std::exp(-2.0 * kPi * kI * eps * sg);
    }
    tr.pt1 = (2.0 * (tr.p0 * tr.pInf + tr.pt * tr.p1)
              - tr.p0t * (tr.p0 * tr.p1 + tr.pt * tr.pInf) - s1) / den;
    tr.p01 = (2.0 * (tr.p0 * tr.p1 + tr.pt * tr.pInf)
              - tr.p0t * (tr.p0 * tr.pInf + tr.pt * tr.p1) + s2) / den;
    return tr;
}

// Jimbo-Fricke quartic; zero on the character variety.
inline Complex jimbo_fricke_residual(const TraceFunctions& t) {
    return t.p0 * t.pt * t.p1 * t.pInf + t.p0t * t.pt1 * t.p01
         - (t.p0 * t.pt + t.p1 * t.pInf) * t.p0t
         - (t.pt * t.p1 + t.p0 * t.pInf) * t.pt1
         - (t.p0 * t.p1 + t.pt * t.pInf) * t.p01
         + t.p0t * t.p0t + t.pt1 * t.pt1 + t.p01 * t.p01
         + t.p0 * t.p0 + t.pt * t.pt + t.p1 * t.p1 + t.pInf * t.pInf - 4.0;
}

struct MonodromyMatrices {
    Mat2 M0, Mt, M1, MInf;
};

// Explicit SL(2) representatives with Mt*M0 = diag(e^{2 pi i sigma}, e^{-2 pi i sigma}).
// Requires s_i / s_e = exp(i eta).
inline MonodromyMatrices matrices_from_darboux(const PVIMonodromy& m, Complex s_i, Complex s_e) {
    const Complex sg = m.sigma;
    const Complex den = kI * std::sin(2.0 * kPi * sg);
    if (std::abs(den) < 1e-12)
        throw DegenerateError("matrices_from_darboux: sin 2 pi sigma vanishes");
    if (std::abs(s_i / s_e - m.expEta) > 1e-12 * std::abs(m.expEta))
        throw GenericityError("matrices_from_darboux: s_i/s_e != exp(i eta)");
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    auto c = [](Complex x) { return 2.0 * kPi * x; };
    const Complex e2s = std::exp(2.0 * kPi * kI * sg);
    MonodromyMatrices r;
    r.M0 = Mat2{e2s * std::cos(c(th0)) - std::cos(c(tht)),
                s_i * (std::cos(c(tht - sg)) - std::cos(c(th0))),
                (std::cos(c(th0)) - std::cos(c(tht + sg))) / s_i,
                std::cos(c(tht)) - std::cos(c(th0)) / e2s} / den;
    r.Mt = Mat2{e2s * std::cos(c(tht)) - std::cos(c(th0)),
                s_i * e2s * (std::cos(c(th0)) - std::cos(c(tht - sg))),
                (std::cos(c(tht + sg)) - std::cos(c(th0))) / (s_i * e2s),
                std::cos(c(th0)) - std::cos(c(tht)) / e2s} / den;
    r.M1 = Mat2{std::cos(c(thI)) - std::cos(c(th1)) / e2s,
                s_e * e2s * (std::cos(c(th1 + sg)) - std::cos(c(thI))),
                (std::cos(c(thI)) - std::cos(c(th1 - sg))) / (s_e * e2s),
                e2s * std::cos(c(th1)) - std::cos(c(thI))} / den;
    r.MInf = Mat2{std::cos(c(th1)) - std::cos(c(thI)) / e2s,
                  s_e * (std::cos(c(thI)) - std::cos(c(th1 + sg))),
                  (std::cos(c(th1 - sg)) - std::cos(c(thI))) / s_e,
                  e2s * std::cos(c(thI)) - std::cos(c(th1))} / den;
    return r;
}

// sigma-bar solving 2 cos 2 pi sigma-bar = pt1, |Re| < 1/2.
// Both roots qualify; we take Re > 0 (principal acos), tie-break Im >= 0.
inline Complex sigma_bar_from_pt1(Complex pt1, double tol = 1e-10) {
    if (std::abs(pt1 - 2.0) < tol || std::abs(pt1 + 2.0) < tol)
        throw DegenerateError("crossing: p_t1 = +-2, sigma-bar degenerate");
    Complex sb = std::acos(pt1 / 2.0) / (2.0 * kPi);
    if (std::abs(sb.real()) >= 0.5 - 1e-12)
        throw DegenerateError("crossing: |Re sigma-bar| = 1/2");
    if (sb.real() == 0.0 && sb.imag() < 0.0) sb = -sb;
    return sb;
}

inline CrossedMonodromy crossing(const PVIMonodromy& m, double genericity_tol = 1e-9) {
    const TraceFunctions tr = traces_from_darboux(m);
    CrossedMonodromy cr;
    cr.sigmaBar = sigma_bar_from_pt1(tr.pt1);
    const Complex sb = cr.sigmaBar;
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    const std::array<Complex, 8> combos = {
        th1 + tht + sb, th1 + tht - sb, th1 - tht + sb, th1 - tht - sb,
        thI + th0 + sb, thI + th0 - sb, thI - th0 + sb, thI - th0 - sb};
    for (Complex c : combos)
        if (dist_to_int(c) < genericity_tol)
            throw GenericityError("crossing: crossed genericity violated");
    const Complex em = std::exp(-2.0 * kPi * kI * sb);
    const Complex num = -2.0 * kI * std::sin(2.0 * kPi * sb) * (tr.p01 + tr.p0t * em)
                      + (tr.p0 * tr.pt + tr.p1 * tr.pInf)
                      - (tr.p0 * tr.p1 + tr.pt * tr.pInf) * em;
    const Complex den = (tr.pInf - 2.0 * std::cos(2.0 * kPi * (th0 - sb)))
                      * (tr.p1 - 2.0 * std::cos(2.0 * kPi * (tht - sb)));
    cr.expEtaBar = num / den;
    cr.etaBar = -kI * std::log(cr.expEtaBar);
    cr.tracesBar = TraceFunctions{tr.p1, tr.pt, tr.p0, tr.pInf, tr.pt1, tr.p0t,
                                  tr.p0 * tr.p1 + tr.pt * tr.pInf - tr.p01 - tr.p0t * tr.pt1};
    return cr;
}

// the crossed data as a monodromy in its own right (theta0 <-> theta1)
inline PVIMonodromy crossed_monodromy(const PVIMonodromy& m) {
    CrossedMonodromy cr = crossing(m);
    return PVIMonodromy({m.theta.theta1, m.theta.thetat, m.theta.theta0, m.theta.thetaInf},
                        cr.sigmaBar, cr.etaBar);
}

// Numerical check that (sigma, eta) are Darboux for the Goldman bracket:
// assembles {p0t, e^{i eta}} from the quadratic bracket values and the
// chain rule through (pt1, p01) as leaf coordinates (central differences,
// Jacobian inverted), and compares with 2 i sin(2 pi sigma) e^{i eta}.
inline double check_darboux_bracket(const PVIMonodromy& m, double h) {
    if (h < 1e-6 || h > 1e-3)
        throw ValidityError("check_darboux_bracket: h outside [1e-6, 1e-3]");
    const TraceFunctions tr = traces_from_darboux(m);
    auto at = [&](double dsg, double det) {
        PVIMonodromy p({m.theta.theta0, m.theta.thetat, m.theta.theta1, m.theta.thetaInf},
                       m.sigma + dsg, m.eta + det);
        return traces_from_darboux(p);
    };
    const TraceFunctions sp = at(h, 0), sm = at(-h, 0), ep = at(0, h), em = at(0, -h);
    // Jacobian of (pt1, p01) wrt (sigma, eta)
    const Complex j11 = (sp.pt1 - sm.pt1) / (2 * h), j12 = (ep.pt1 - em.pt1) / (2 * h);
    const Complex j21 = (sp.p01 - sm.p01) / (2 * h), j22 = (ep.p01 - em.p01) / (2 * h);
    const Complex det = j11 * j22 - j12 * j21;
    // gradient of e^{i eta} in (sigma, eta)
    const Complex g1 = 0.0, g2 = kI * m.expEta;
    // partials wrt (pt1, p01) at fixed Casimirs
    const Complex d_pt1 = (g1 * j22 - g2 * j21) / det;
    const Complex d_p01 = (g2 * j11 - g1 * j12) / det;
    // Goldman bracket values
    const Complex pb1 = 2.0 * tr.p01 + tr.p0t * tr.pt1 - tr.p0 * tr.p1 - tr.pt * tr.pInf;
    const Complex pb2 = -(2.0 * tr.pt1 + tr.p0t * tr.p01 - tr.pt * tr.p1 - tr.p0 * tr.pInf);
    const Complex bracket = d_pt1 * pb1 + d_p01 * pb2;
    return std::abs(bracket - 2.0 * kI * std::sin(2.0 * kPi * m.sigma) * m.expEta);
}

} // namespace isotau::pvi

#endif
