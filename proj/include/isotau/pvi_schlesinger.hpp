#ifndef ISOTAU_PVI_SCHLESINGER_HPP
#define ISOTAU_PVI_SCHLESINGER_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/mat2.hpp"
#include "isotau/ode.hpp"
#include "isotau/pvi_monodromy.hpp"
#include "isotau/pvi_parametrix.hpp"
#include "isotau/pvi_tau.hpp"

// Independent verification route: integrate the rank-2 Schlesinger system
// across (0, 1) from parametrix-built initial data near t = 0, accumulate
// the time part of the isomonodromic 1-form, and extract the connection
// constant numerically.

namespace isotau::pvi {

struct SchlesingerState {
    double t;
    Mat2 A0, At, A1;

    Mat2 AInf() const { return (A0 + At + A1) * Complex(-1.0); }
};

// Improved initial data at small t0: leading conjugations t0^S A t0^{-S}
// dressed with the first correction matrices (q(0,t)-truncation and Ecal).
inline SchlesingerState initial_data(const PVIMonodromy& m, double t0) {
    if (!(t0 > 0.0 && t0 <= 0.01))
        throw ValidityError("initial_data: t0 outside (0, 0.01]");
    const ParametrixData d = make_parametrix(m);
    const Mat2 one = Mat2::identity();
    const Mat2 S = Mat2::diag(m.sigma, -m.sigma);
    const Mat2 A0i = S - d.A1I;
    auto [eps, Ecal] = epsilon_correction(d, t0);
    const Mat2 q0 = commutator(d.gE01, eps);   // q(0,t) up to o(t)
    const Mat2 C0 = one - q0;
    const Mat2 Ct = one - q0 + t0 * d.gE01;
    const Mat2 C1 = one + Ecal;
    SchlesingerState s;
    s.t = t0;
    s.A0 = C0 * conj_by_tS(A0i, t0, m.sigma) * C0.inv();
    s.At = Ct * conj_by_tS(d.A1I, t0, m.sigma) * Ct.inv();
    s.A1 = C1 * d.A1E * C1.inv();
    return s;
}

struct Trajectory {
    SchlesingerState state;     // final state
    Complex intP;               // accumulated integral of the time part
    std::size_t steps = 0;
    // per-step samples for diagnostics / CSV
    std::vector<double> ts;
    std::vector<SchlesingerState> samples;
    std::vector<Complex> Ps;
};

inline Complex time_part(const SchlesingerState& s) {
    return trace_prod(s.At, s.A0) / s.t + trace_prod(s.At, s.A1) / (s.t - 1.0);
}

// Integrate dA0/dt = [At,A0]/t, dA1/dt = [At,A1]/(t-1), At = -AInf - A0 - A1,
// quadrature of the time part carried as an extra state component.
inline Trajectory integrate(const SchlesingerState& s0, double t1, double tol,
                            bool keep_samples = false) {
    const Mat2 AI = s0.AInf();
    auto unpack = [](const OdeState& y, double t) {
        SchlesingerState s;
        s.t = t;
        s.A0 = {y[0], y[1], y[2], y[3]};
        s.A1 = {y[4], y[5], y[6], y[7]};
        return s;
    };
    auto rhs = [&AI](double t, const OdeState& y, OdeState& dy) {
        const Mat2 A0{y[0], y[1], y[2], y[3]};
        const Mat2 A1{y[4], y[5], y[6], y[7]};
        const Mat2 At = (AI + A0 + A1) * Complex(-1.0);
        const Mat2 d0 = commutator(At, A0) / Complex(t);
        const Mat2 d1 = commutator(At, A1) / Complex(t - 1.0);
        dy[0] = d0.a; dy[1] = d0.b; dy[2] = d0.c; dy[3] = d0.d;
        dy[4] = d1.a; dy[5] = d1.b; dy[6] = d1.c; dy[7] = d1.d;
        dy[8] = trace_prod(At, A0) / t + trace_prod(At, A1) / (t - 1.0);
    };
    OdeState y = {s0.A0.a, s0.A0.b, s0.A0.c, s0.A0.d,
                  s0.A1.a, s0.A1.b, s0.A1.c, s0.A1.d, 0.0};
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol * 1e-2;
    Trajectory tr;
    auto observer = [&](double t, const OdeState& yy) {
        ++tr.steps;
        if (keep_samples) {
            SchlesingerState s = unpack(yy, t);
            s.At = (AI + s.A0 + s.A1) * Complex(-1.0);
            tr.ts.push_back(t);
            tr.Ps.push_back(time_part(s));
            tr.samples.push_back(s);
        }
    };
    integrate_dopri5(rhs, y, s0.t, t1, opt, observer);
    tr.state = unpack(y, t1);
    tr.state.At = (AI + tr.state.A0 + tr.state.A1) * Complex(-1.0);
    tr.intP = y[8];
    return tr;
}

struct UpsilonNumericResult {
    Complex upsilonNumeric;
    Complex upsilonClosedForm;
    double relError;
    Complex intP;
};

// ln tau(1-t0) - ln tau(t0) = int P dt; subtracting the closed-form models of
// both tails leaves ln of the ratio of normalization constants, i.e. ln Upsilon.
inline UpsilonNumericResult upsilon_numeric(const PVIMonodromy& m, double t0, double tol) {
    const SchlesingerState s0 = initial_data(m, t0);
    const Trajectory tr = integrate(s0, 1.0 - t0, tol);
    const TauExpansion e0 = tau_expansion_zero(m);
    const TauExpansion e1 = tau_expansion_one(m);
    const double lt = std::log(t0);
    const Complex lnUps = tr.intP - (e1.exponent * lt + e1.log_bracket(t0))
                                  + (e0.exponent * lt + e0.log_bracket(t0));
    UpsilonNumericResult r;
    r.upsilonNumeric = std::exp(lnUps);
    r.upsilonClosedForm = upsilon_pvi(m).upsilon;
    r.relError = std::abs(r.upsilonNumeric / r.upsilonClosedForm - 1.0);
    r.intP = tr.intP;
    return r;
}

} // namespace isotau::pvi

#endif
