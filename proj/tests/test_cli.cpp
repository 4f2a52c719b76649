#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "../tools/cli_run.hpp"
#include "isotau/io_json.hpp"

using namespace isotau;
using namespace isotau::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = std::string("cli_test_") + name + ".json";
    std::ofstream out(path);
    out << body;
    return path;
}

const char* kMonodromyJson = R"({
  "theta0": [0.11, 0.0], "thetat": [0.17, 0.0],
  "theta1": [0.23, 0.0], "thetaInf": [0.31, 0.0],
  "sigma": [0.13, 0.0], "eta": [0.4, 0.0]
})";

const char* kStokesHmJson = R"({
  "s1": [0.0, 0.0], "s2": [0.0, -1.0], "s3": [0.0, -1.0]
})";

} // namespace

TEST_CASE("json io round trips and validates") {
    io::json j = io::json::parse(kMonodromyJson);
    pvi::PVIMonodromy m = io::monodromy_from_json(j);
    CHECK(m.sigma == Complex(0.13, 0.0));
    io::json back = io::monodromy_to_json(m);
    CHECK(back["eta"][0].get<double>() == 0.4);
    CHECK_THROWS_AS(io::monodromy_from_json(io::json::parse("{\"theta0\": [0.1, 0]}")),
                    io::ParseError);
    CHECK_THROWS_AS(io::monodromy_from_json(io::json::parse("{\"theta0\": 3}")),
                    io::ParseError);
}

TEST_CASE("stokes io: s3 derived or validated") {
    io::json j = io::json::parse(R"({"s1": [0.0, 0.1], "s2": [0.0, 0.198019801980198]})");
    pii::PIIStokes s = io::stokes_from_json(j);
    CHECK(std::abs(s.s3 - Complex(0.0, 0.1)) < 1e-12);
    io::json bad = io::json::parse(
        R"({"s1": [0.0, 0.1], "s2": [0.0, 0.198019801980198], "s3": [0.5, 0.0]})");
    CHECK_THROWS_AS(io::stokes_from_json(bad), GenericityError);
}

TEST_CASE("pii-upsilon on the rotated HM data prints the 0.865 + 0.114i region value") {
    RunConfig cfg;
    cfg.command = Command::PiiUpsilon;
    cfg.inputPath = write_temp("hm", kStokesHmJson);
    std::string rep = run_report(cfg);
    io::json j = io::json::parse(rep);
    CHECK(j["schemaVersion"].get<int>() == 1);
    CHECK(std::abs(j["upsilon"][0].get<double>() - 0.865) < 1e-3);
    CHECK(std::abs(j["upsilon"][1].get<double>() - 0.114) < 1e-3);
    std::remove(cfg.inputPath.c_str());
}

TEST_CASE("reports are bitwise deterministic") {
    RunConfig cfg;
    cfg.command = Command::PviUpsilon;
    cfg.inputPath = write_temp("m", kMonodromyJson);
    CHECK(run_report(cfg) == run_report(cfg));
    std::remove(cfg.inputPath.c_str());
}

TEST_CASE("exit codes: malformed input and invalid config") {
    RunConfig cfg;
    cfg.command = Command::PviUpsilon;
    cfg.inputPath = write_temp("bad", "{ not json");
    CHECK(run(cfg) == kExitConfig);
    std::remove(cfg.inputPath.c_str());

    RunConfig cfg2;
    cfg2.command = Command::PviVerify;
    cfg2.inputPath = write_temp("m2", kMonodromyJson);
    cfg2.t0 = 0.5;   // outside (0, 0.01]
    CHECK(run(cfg2) == kExitConfig);
    cfg2.t0 = 1e-3;
    cfg2.tol = 1.0;  // outside [1e-14, 1e-2]
    CHECK(run(cfg2) == kExitConfig);
    std::remove(cfg2.inputPath.c_str());
}

TEST_CASE("exit code for genericity violations") {
    RunConfig cfg;
    cfg.command = Command::PviUpsilon;
    cfg.inputPath = write_temp("degenerate", R"({
      "theta0": [0.11, 0.0], "thetat": [0.17, 0.0],
      "theta1": [0.23, 0.0], "thetaInf": [0.31, 0.0],
      "sigma": [0.0, 0.0], "eta": [0.4, 0.0]
    })");
    CHECK(run(cfg) == kExitGenericity);
    std::remove(cfg.inputPath.c_str());
}

TEST_CASE("pvi-upsilon then pvi-verify on the same file agree") {
    RunConfig cfg;
    cfg.command = Command::PviUpsilon;
    cfg.inputPath = write_temp("verify", kMonodromyJson);
    io::json ju = io::json::parse(run_report(cfg));
    cfg.command = Command::PviVerify;
    cfg.t0 = 1e-3;   // loose matching point keeps the test quick
    cfg.tol = 1e-10;
    io::json jv = io::json::parse(run_report(cfg));
    CHECK(jv["relError"].get<double>() < 2e-2);
    CHECK(std::abs(jv["upsilonClosedForm"][0].get<double>() - ju["upsilon"][0].get<double>())
          < 1e-12);
    std::remove(cfg.inputPath.c_str());
}

TEST_CASE("specfun eval emits a JSON number pair") {
    RunConfig cfg;
    cfg.command = Command::SpecfunEval;
    cfg.fn = "ghat";
    cfg.zArg = "0.3+0.2i";
    io::json j = io::json::parse(run_report(cfg));
    CHECK(std::abs(j["value"][0].get<double>() - 1.239572769972924686573) < 1e-12);
    CHECK(std::abs(j["value"][1].get<double>() - 0.2750317535762148562607) < 1e-12);
}
