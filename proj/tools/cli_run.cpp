#include "cli_run.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isotau/io_json.hpp"
#include "isotau/isotau.hpp"

namespace isotau::cli {

using io::json;

namespace {

Complex parse_complex_arg(const std::string& s) {
    // accepts "re", "re+imi" / "re-imi", e.g. "0.3+0.2i"
    std::string t = s;
    if (!t.empty() && (t.back() == 'i' || t.back() == 'j')) {
        t.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) throw io::ParseError("bad complex literal: " + s);
        return {std::stod(t.substr(0, split)), std::stod(t.substr(split))};
    }
    return {std::stod(t), 0.0};
}

void validate(const RunConfig& cfg) {
    if (cfg.tol < 1e-14 || cfg.tol > 1e-2)
        throw io::ParseError("tolerance outside [1e-14, 1e-2]");
    if (cfg.command == Command::PviVerify && !(cfg.t0 > 0.0 && cfg.t0 <= 0.01))
        throw io::ParseError("t0 outside (0, 0.01]");
    if ((cfg.command == Command::PiiVerify || cfg.command == Command::PiiHmCheck) && cfg.T < 8.0)
        throw io::ParseError("T < 8");
    if (cfg.outputFormat != "json" && cfg.outputFormat != "csv")
        throw io::ParseError("output format must be json or csv");
}

json specfun_eval(const RunConfig& cfg) {
    const Complex z = parse_complex_arg(cfg.zArg);
    Complex v;
    if (cfg.fn == "loggamma") v = specfun::log_gamma(z);
    else if (cfg.fn == "digamma") v = specfun::digamma(z);
    else if (cfg.fn == "logbarnesg") v = specfun::log_barnes_g(z);
    else if (cfg.fn == "ghat") v = specfun::g_hat(z);
    else if (cfg.fn == "dilog") v = specfun::dilog(z);
    else throw io::ParseError("unknown --fn (loggamma|digamma|logbarnesg|ghat|dilog)");
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "specfun-eval"},
                {"fn", cfg.fn},
                {"z", io::complex_to_json(z)},
                {"value", io::complex_to_json(v)}};
}

json pvi_asymp(const pvi::PVIMonodromy& m) {
    const pvi::TauExpansion e0 = pvi::tau_expansion_zero(m);
    const pvi::TauExpansion e1 = pvi::tau_expansion_one(m);
    const pvi::CrossedMonodromy cr = pvi::crossing(m);
    auto expansion = [](const pvi::TauExpansion& e) {
        return json{{"exponent", io::complex_to_json(e.exponent)},
                    {"coeffPlus", io::complex_to_json(e.coeffPlus)},
                    {"coeffMinus", io::complex_to_json(e.coeffMinus)},
                    {"coeffLinear", io::complex_to_json(e.coeffLinear)},
                    {"kappa", io::complex_to_json(e.kappa)}};
    };
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "pvi-asymp"},
                {"atZero", expansion(e0)},
                {"atOne", expansion(e1)},
                {"sigmaBar", io::complex_to_json(cr.sigmaBar)},
                {"expEtaBar", io::complex_to_json(cr.expEtaBar)}};
}

json pvi_upsilon(const pvi::PVIMonodromy& m) {
    const pvi::UpsilonResult u = pvi::upsilon_pvi(m);
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "pvi-upsilon"},
                {"upsilon", io::complex_to_json(u.upsilon)},
                {"sigmaBar", io::complex_to_json(u.sigmaBar)},
                {"varsigma", io::complex_to_json(u.varsigma)}};
}

json pvi_verify(const pvi::PVIMonodromy& m, const RunConfig& cfg) {
    if (!cfg.csvPath.empty()) {
        const pvi::SchlesingerState s0 = pvi::initial_data(m, cfg.t0);
        const pvi::Trajectory tr = pvi::integrate(s0, 1.0 - cfg.t0, cfg.tol, true);
        std::ofstream csv(cfg.csvPath);
        csv << "t,ReA0a,ImA0a,ReA0b,ImA0b,ReA0c,ImA0c,ReA0d,ImA0d,"
               "ReAta,ImAta,ReAtb,ImAtb,ReAtc,ImAtc,ReAtd,ImAtd,"
               "ReA1a,ImA1a,ReA1b,ImA1b,ReA1c,ImA1c,ReA1d,ImA1d,ReP,ImP\n";
        for (std::size_t i = 0; i < tr.ts.size(); ++i) {
            const pvi::SchlesingerState& s = tr.samples[i];
            csv << tr.ts[i];
            for (const Mat2* M : {&s.A0, &s.At, &s.A1})
                for (Complex v : {M->a, M->b, M->c, M->d})
                    csv << ',' << v.real() << ',' << v.imag();
            csv << ',' << tr.Ps[i].real() << ',' << tr.Ps[i].imag() << '\n';
        }
    }
    const pvi::UpsilonNumericResult r = pvi::upsilon_numeric(m, cfg.t0, cfg.tol);
    std::cerr << "pvi-verify: relError = " << r.relError << "\n";
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "pvi-verify"},
                {"upsilonNumeric", io::complex_to_json(r.upsilonNumeric)},
                {"upsilonClosedForm", io::complex_to_json(r.upsilonClosedForm)},
                {"relError", r.relError},
                {"polesDetected", json::array()}};
}

json pii_upsilon(const pii::PIIStokes& s) {
    const pii::PIIExponents e = pii::exponents_from_stokes(s);
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "pii-upsilon"},
                {"upsilon", io::complex_to_json(pii::upsilon_pii_closed(s))},
                {"mu", io::complex_to_json(e.mu)},
                {"nu", io::complex_to_json(e.nu)},
                {"eta", io::complex_to_json(e.eta)},
                {"sgn", e.sgn}};
}

json pii_verify(const pii::PIIStokes& s, const RunConfig& cfg) {
    if (cfg.T < 25.0) throw io::ParseError("pii-verify: T < 25");
    if (!cfg.csvPath.empty()) {
        const pii::PIITrajectory tr = pii::integrate_pii(s, cfg.T, cfg.tol, false, true);
        std::ofstream csv(cfg.csvPath);
        csv << "t,Reu,Imu,Rev,Imv,ReH,ImH\n";
        for (const pii::PIIState& st : tr.samples) {
            const Complex H = st.hamiltonian();
            csv << st.t << ',' << st.u.real() << ',' << st.u.imag() << ','
                << st.v.real() << ',' << st.v.imag() << ','
                << H.real() << ',' << H.imag() << '\n';
        }
    }
    const pii::UpsilonPIINumeric r = pii::upsilon_pii_numeric(s, cfg.T, cfg.tol);
    std::cerr << "pii-verify: relError = " << r.relError
              << ", endpoint mismatch = " << r.endpointMismatch << "\n";
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "pii-verify"},
                {"upsilonNumeric", io::complex_to_json(r.upsilonNumeric)},
                {"upsilonClosedForm", io::complex_to_json(r.upsilonClosedForm)},
                {"relError", r.relError},
                {"polesDetected", json::array()}};
}

json pii_hm(const RunConfig& cfg) {
    const pii::HastingsMcLeodResult r = pii::hastings_mcleod_check(cfg.T, cfg.tol);
    std::cerr << "pii-hm-check: u(0) = " << r.u0 << "\n";
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "pii-hm-check"},
                {"upsilonNumeric", r.upsilonNumeric},
                {"target", r.target},
                {"relError", r.relError}};
}

json pii_chi(const pii::PIIStokes& s) {
    const pii::ChiResult r = pii::chi_and_periodicity(s);
    return json{{"schemaVersion", io::kSchemaVersion},
                {"command", "pii-chi"},
                {"chi", io::complex_to_json(r.chi)},
                {"residualMinus", r.residualMinus},
                {"residualPlus", r.residualPlus}};
}

json dispatch(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::SpecfunEval: return specfun_eval(cfg);
        case Command::PviAsymp: return pvi_asymp(io::monodromy_from_json(io::load_file(cfg.inputPath)));
        case Command::PviUpsilon: return pvi_upsilon(io::monodromy_from_json(io::load_file(cfg.inputPath)));
        case Command::PviVerify: return pvi_verify(io::monodromy_from_json(io::load_file(cfg.inputPath)), cfg);
        case Command::PiiUpsilon: return pii_upsilon(io::stokes_from_json(io::load_file(cfg.inputPath)));
        case Command::PiiVerify: return pii_verify(io::stokes_from_json(io::load_file(cfg.inputPath)), cfg);
        case Command::PiiHmCheck: return pii_hm(cfg);
        case Command::PiiChi: return pii_chi(io::stokes_from_json(io::load_file(cfg.inputPath)));
    }
    throw io::ParseError("unknown command");
}

} // namespace

std::string run_report(const RunConfig& cfg) {
    validate(cfg);
    return dispatch(cfg).dump(2) + "\n";
}

int run(const RunConfig& cfg) {
    try {
        std::cout << run_report(cfg);
        return kExitOk;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ToleranceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const PoleEncountered& e) {
        std::cerr << "error: " << e.what() << " at t = " << e.location << "\n";
        return kExitPole;
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    } catch (const SingularError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    } catch (const IsotauError& e) {
        // genericity, degeneracy, resonance, validity
        std::cerr << "error: " << e.what() << "\n";
        return kExitGenericity;
    }
}

} // namespace isotau::cli
