#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "cli_run.hpp"

// isotau: evaluate and verify isomonodromic tau-function connection
// constants for Painleve VI and Painleve II.

int main(int argc, char** argv) {
    using isotau::cli::Command;
    using isotau::cli::RunConfig;

    CLI::App app{"isomonodromic tau-function connection constants"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("ISOTAU_TOL")) cfg.tol = std::atof(env);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "integration / evaluation tolerance");
        sub->add_option("--csv", cfg.csvPath, "write trajectory CSV to this path");
        sub->add_option("--format", cfg.outputFormat, "report format (json)");
    };

    CLI::App* spec = app.add_subcommand("specfun", "special-function evaluation");
    CLI::App* specEval = spec->add_subcommand("eval", "evaluate one function");
    specEval->add_option("--fn", cfg.fn, "loggamma|digamma|logbarnesg|ghat|dilog")->required();
    specEval->add_option("--z", cfg.zArg, "complex argument, e.g. \"0.3+0.2i\"")->required();

    CLI::App* pvi = app.add_subcommand("pvi", "Painleve VI");
    CLI::App* pviAsymp = pvi->add_subcommand("asymp", "tau expansions at t=0 and t=1");
    CLI::App* pviUps = pvi->add_subcommand("upsilon", "closed-form connection constant");
    CLI::App* pviVerify = pvi->add_subcommand("verify", "Schlesinger cross-check");
    for (CLI::App* sub : {pviAsymp, pviUps, pviVerify}) {
        sub->add_option("--monodromy", cfg.inputPath, "monodromy JSON file")->required();
        add_common(sub);
    }
    pviVerify->add_option("--t0", cfg.t0, "matching point near t=0");

    CLI::App* pii = app.add_subcommand("pii", "Painleve II");
    CLI::App* piiUps = pii->add_subcommand("upsilon", "closed-form connection coefficient");
    CLI::App* piiVerify = pii->add_subcommand("verify", "tau-integral cross-check");
    CLI::App* piiHm = pii->add_subcommand("hm-check", "Hastings-McLeod constant");
    CLI::App* piiChi = pii->add_subcommand("chi", "quasi-periodic constant chi");
    for (CLI::App* sub : {piiUps, piiVerify, piiChi}) {
        sub->add_option("--stokes", cfg.inputPath, "Stokes JSON file")->required();
        add_common(sub);
    }
    piiVerify->add_option("--T", cfg.T, "integration half-range");
    piiHm->add_option("--T", cfg.T, "tail matching range");
    add_common(piiHm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : isotau::cli::kExitConfig;
    }

    if (specEval->parsed()) cfg.command = Command::SpecfunEval;
    else if (pviAsymp->parsed()) cfg.command = Command::PviAsymp;
    else if (pviUps->parsed()) cfg.command = Command::PviUpsilon;
    else if (pviVerify->parsed()) cfg.command = Command::PviVerify;
    else if (piiUps->parsed()) cfg.command = Command::PiiUpsilon;
    else if (piiVerify->parsed()) cfg.command = Command::PiiVerify;
    else if (piiHm->parsed()) cfg.command = Command::PiiHmCheck;
    else if (piiChi->parsed()) cfg.command = Command::PiiChi;
    else return isotau::cli::kExitConfig;

    if (piiHm->parsed()) cfg.T = (cfg.T == 40.0) ? 12.0 : cfg.T;

    return isotau::cli::run(cfg);
}
