#ifndef ISOTAU_PVI_PARAMETRIX_HPP
#define ISOTAU_PVI_PARAMETRIX_HPP

#include <cmath>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/mat2.hpp"
#include "isotau/pvi_monodromy.hpp"
#include "isotau/specfun.hpp"

// The two 3-point hypergeometric model systems attached to the collisions
// t -> 0 (interior, singularities of A0/At) and the exterior system carrying
// A1/AInf. Everything reduces to Gamma-function dictionaries between the
// residue-matrix parameters (r_e, r_i) and the monodromy twists (s_e, s_i).

namespace isotau::pvi {

struct ParametrixData {
    Complex sigma;                 // S = diag(sigma, -sigma)
    Complex rE, rI, sE, sI;
    Mat2 A1E, A1I;                 // residue matrices at z = 1 of the two systems
    Mat2 gE01, gIinf1;             // first local expansion coefficients
    Complex kappa;                 // = rI / rE
};

namespace detail {

inline Complex gamma_ratio_log(const PVIMonodromy& m, bool exterior) {
    using specfun::log_gamma;
    const Complex sg = m.sigma;
    if (exterior) {
        const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
        return log_gamma(1.0 - 2.0 * sg) + log_gamma(1.0 + thI + th1 + sg)
             + log_gamma(1.0 - thI + th1 + sg) - log_gamma(1.0 + 2.0 * sg)
             - log_gamma(1.0 + thI + th1 - sg) - log_gamma(1.0 - thI + th1 - sg);
    }
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    return log_gamma(1.0 + 2.0 * sg) + log_gamma(1.0 + th0 + tht - sg)
         + log_gamma(1.0 - th0 + tht - sg) - log_gamma(1.0 - 2.0 * sg)
         - log_gamma(1.0 + th0 + tht + sg) - log_gamma(1.0 - th0 + tht + sg);
}

} // namespace detail

// invert the printed s_e(r_e), s_i(r_i) Gamma-ratio relations
inline std::pair<Complex, Complex> r_from_s(const PVIMonodromy& m, Complex sE, Complex sI) {
    Complex rE = sE * std::exp(-detail::gamma_ratio_log(m, true));
    Complex rI = sI * std::exp(-detail::gamma_ratio_log(m, false));
    return {rE, rI};
}

inline std::pair<Complex, Complex> s_from_r(const PVIMonodromy& m, Complex rE, Complex rI) {
    Complex sE = rE * std::exp(detail::gamma_ratio_log(m, true));
    Complex sI = rI * std::exp(detail::gamma_ratio_log(m, false));
    return {sE, sI};
}

inline std::pair<Mat2, Mat2> build_A1(const PVIMonodromy& m, Complex rE, Complex rI) {
    const Complex sg = m.sigma;
    if (std::abs(sg) < 1e-12) throw DegenerateError("build_A1: sigma = 0");
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    Mat2 A1E = Mat2{thI * thI - th1 * th1 - sg * sg,
                    rE * ((th1 + sg) * (th1 + sg) - thI * thI),
                    (thI * thI - (th1 - sg) * (th1 - sg)) / rE,
                    sg * sg + th1 * th1 - thI * thI} / (2.0 * sg);
    Mat2 A1I = Mat2{sg * sg + tht * tht - th0 * th0,
                    rI * (th0 * th0 - (sg - tht) * (sg - tht)),
                    ((sg + tht) * (sg + tht) - th0 * th0) / rI,
                    th0 * th0 - tht * tht - sg * sg} / (2.0 * sg);
    return {A1E, A1I};
}

// explicit g^e_{0,1}, g^i_{inf,1} (solve g +- [g, S] + A1 = 0 entrywise)
inline std::pair<Mat2, Mat2> build_g_coefficients(const PVIMonodromy& m, Complex rE, Complex rI) {
    const Complex sg = m.sigma;
    if (std::abs(2.0 * sg) < 1e-9 || std::abs(2.0 * sg - 1.0) < 1e-9
        || std::abs(2.0 * sg + 1.0) < 1e-9)
        throw ResonanceError("build_g_coefficients: 2 sigma in {0, +-1}");
    const Complex th0 = m.theta.theta0, tht = m.theta.thetat;
    const Complex th1 = m.theta.theta1, thI = m.theta.thetaInf;
    Mat2 gE01{(sg * sg + th1 * th1 - thI * thI) / (2.0 * sg),
              rE * ((th1 + sg) * (th1 + sg) - thI * thI) / (2.0 * sg * (2.0 * sg - 1.0)),
              ((th1 - sg) * (th1 - sg) - thI * thI) / (rE * 2.0 * sg * (2.0 * sg + 1.0)),
              (thI * thI - th1 * th1 - sg * sg) / (2.0 * sg)};
    Mat2 gIinf1{(th0 * th0 - tht * tht - sg * sg) / (2.0 * sg),
                rI * ((tht - sg) * (tht - sg) - th0 * th0) / (2.0 * sg * (2.0 * sg + 1.0)),
                ((tht + sg) * (tht + sg) - th0 * th0) / (rI * 2.0 * sg * (2.0 * sg - 1.0)),
                (tht * tht - th0 * th0 + sg * sg) / (2.0 * sg)};
    return {gE01, gIinf1};
}

inline ParametrixData make_parametrix(const PVIMonodromy& m) {
    ParametrixData d;
    d.sigma = m.sigma;
    d.sE = 1.0;
    d.sI = m.expEta;
    auto [rE, rI] = r_from_s(m, d.sE, d.sI);
    d.rE = rE;
    d.rI = rI;
    auto [A1E, A1I] = build_A1(m, rE, rI);
    d.A1E = A1E;
    d.A1I = A1I;
    auto [gE, gI] = build_g_coefficients(m, rE, rI);
    d.gE01 = gE;
    d.gIinf1 = gI;
    d.kappa = rI / rE;
    return d;
}

// Connection matrix C^e_inf of the exterior system (free diagonal
// normalization cA, cB; the paper never fixes it and it cancels everywhere).
inline Mat2 connection_matrix_Cinf(const PVIMonodromy& m, Complex rE,
                                   Complex cA = 1.0, Complex cB = 1.0) {
    using specfun::log_gamma;
    const Complex sg = m.sigma, th1 = m.theta.theta1, thI = m.theta.thetaInf;
    auto G = [](Complex num1, Complex num2, Complex den1, Complex den2) {
        return std::exp(log_gamma(num1) + log_gamma(num2) - log_gamma(den1) - log_gamma(den2));
    };
    Mat2 core{G(-2.0 * thI, 2.0 * sg, -th1 - thI + sg, 1.0 + th1 - thI + sg) / rE,
              G(-2.0 * thI, -2.0 * sg, -th1 - thI - sg, 1.0 + th1 - thI - sg),
              G(2.0 * thI, 2.0 * sg, -th1 + thI + sg, 1.0 + th1 + thI + sg),
              rE * G(2.0 * thI, -2.0 * sg, -th1 + thI - sg, 1.0 + th1 + thI - sg)};
    return Mat2::diag(cA, cB) * core;
}

// Interior connection matrix C^i_0.
inline Mat2 connection_matrix_C0int(const PVIMonodromy& m, Complex rI,
                                    Complex cA = 1.0, Complex cB = 1.0) {
    using specfun::log_gamma;
    const Complex sg = m.sigma, th0 = m.theta.theta0, tht = m.theta.thetat;
    auto G = [](Complex num1, Complex num2, Complex den1, Complex den2) {
        return std::exp(log_gamma(num1) + log_gamma(num2) - log_gamma(den1) - log_gamma(den2));
    };
    Mat2 core{G(-2.0 * th0, -2.0 * sg, -th0 - tht - sg, 1.0 - th0 + tht - sg) / rI,
              G(-2.0 * th0, 2.0 * sg, -th0 - tht + sg, 1.0 - th0 + tht + sg),
              G(2.0 * th0, -2.0 * sg, th0 - tht - sg, 1.0 + th0 + tht - sg),
              rI * G(2.0 * th0, 2.0 * sg, th0 - tht + sg, 1.0 + th0 + tht + sg)};
    return Mat2::diag(cA, cB) * core;
}

// Exterior connection matrix C^e_{1,+-} at z = 1 (sheet sign in the last factor).
inline Mat2 connection_matrix_C1ext(const PVIMonodromy& m, Complex rE, int sheet,
                                    Complex cA = 1.0, Complex cB = 1.0) {
    using specfun::log_gamma;
    const Complex sg = m.sigma, th1 = m.theta.theta1, thI = m.theta.thetaInf;
    auto G = [](Complex num1, Complex num2, Complex den1, Complex den2) {
        return std::exp(log_gamma(num1) + log_gamma(num2) - log_gamma(den1) - log_gamma(den2));
    };
    Mat2 core{G(2.0 * sg, -2.0 * th1, -th1 - thI + sg, -th1 + thI + sg) / rE,
              G(-2.0 * sg, -2.0 * th1, -th1 - thI - sg, -th1 + thI - sg),
              G(2.0 * sg, 2.0 * th1, 1.0 + th1 - thI + sg, 1.0 + th1 + thI + sg),
              rE * G(-2.0 * sg, 2.0 * th1, 1.0 + th1 - thI - sg, 1.0 + th1 + thI - sg)};
    const Complex ph = std::exp(Complex(0, -sheet) * kPi * sg);
    return Mat2::diag(cA, cB) * core * Mat2::diag(ph, 1.0 / ph);
}

// epsilon(t) = t^{1+S} g^i_{inf,1} t^{-S} and Ecal(t) = eps (1 - g^e_{0,1} eps)^{-1}
inline std::pair<Mat2, Mat2> epsilon_correction(const ParametrixData& d, double t) {
    if (!(t > 0.0 && t < 1.0))
        throw ValidityError("epsilon_correction: t outside (0, 1)");
    Mat2 eps = t * conj_by_tS(d.gIinf1, t, d.sigma);
    Mat2 one = Mat2::identity();
    Mat2 denom = one - d.gE01 * eps;
    if (std::abs(denom.det()) < 1e-14)
        throw SingularError("epsilon_correction: 1 - g^e eps not invertible");
    Mat2 Ecal = eps * denom.inv();
    return {eps, Ecal};
}

} // namespace isotau::pvi

#endif
