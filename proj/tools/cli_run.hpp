#ifndef ISOTAU_CLI_RUN_HPP
#define ISOTAU_CLI_RUN_HPP

#include <optional>
#include <string>

namespace isotau::cli {

enum class Command {
    SpecfunEval,
    PviAsymp,
    PviUpsilon,
    PviVerify,
    PiiUpsilon,
    PiiVerify,
    PiiHmCheck,
    PiiChi,
};

struct RunConfig {
    Command command;
    std::string inputPath;                // monodromy / stokes file
    double tol = 1e-10;
    double t0 = 1e-4;
    double T = 40.0;
    std::string fn;                       // specfun eval: function name
    std::string zArg;                     // specfun eval: argument "re+imi"
    std::string csvPath;                  // optional trajectory dump
    std::string outputFormat = "json";
};

// exit codes: 0 ok, 2 invalid config/parse, 3 genericity violations,
// 4 pole encountered, 5 tolerance failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitGenericity = 3;
inline constexpr int kExitPole = 4;
inline constexpr int kExitTolerance = 5;

// validates config invariants, runs the command, prints the report on
// stdout and diagnostics on stderr; returns the exit code
int run(const RunConfig& cfg);

// report body for deterministic-output tests
std::string run_report(const RunConfig& cfg);

} // namespace isotau::cli

#endif
