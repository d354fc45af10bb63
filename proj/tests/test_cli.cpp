#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gh/cli.hpp"
#include "gh/io.hpp"
#include "gh/jordan.hpp"
#include "test_support.hpp"

using namespace gh;
using cli::Command;
using cli::RunConfig;
using cli::RunResult;
using io::json;

namespace {

std::string instanceJson(const Matrix& m, const Vector& x) {
    json j{{"matrix", io::matrixToJson(m)}, {"vector", io::vectorToJson(x)}};
    return j.dump();
}

RunConfig verifyConfig(const Matrix& m, const Vector& x, long n, Variant variant,
                       VerifyMode mode = VerifyMode::Theorem) {
    RunConfig config;
    config.command = Command::Verify;
    config.inlineInput = instanceJson(m, x);
    config.n = n;
    config.variant = variant;
    config.verifyMode = mode;
    return config;
}

} // namespace

TEST_CASE("gen assembles and is deterministic") {
    RunConfig config;
    config.command = Command::Gen;
    config.inlineInput = R"({"eigenvalue":1,"blocks":[3]})";
    const RunResult plain = cli::run(config);
    REQUIRE(plain.exitCode == 0);
    const json out = json::parse(plain.output);
    CHECK(io::matrixFromJson(out.at("matrix")) == jordanBlock(3, 1));
    CHECK(io::matrixFromJson(out.at("conjugator")) == Matrix::identity(3));

    config.inlineInput = R"({"eigenvalue":1,"blocks":[4],"seed":7})";
    const RunResult first = cli::run(config);
    const RunResult second = cli::run(config);
    REQUIRE(first.exitCode == 0);
    CHECK(first.output == second.output);
    const Matrix viaSpec = assemble(JordanSpec{1, {4}, 7}).matrix;
    CHECK(io::matrixFromJson(json::parse(first.output).at("matrix")) == viaSpec);

    // --seed overrides the spec's seed
    RunConfig overridden = config;
    overridden.inlineInput = R"({"eigenvalue":1,"blocks":[4]})";
    overridden.seed = 7;
    CHECK(cli::run(overridden).output == first.output);
}

TEST_CASE("orbit emits exact norm CSV") {
    RunConfig config;
    config.command = Command::Orbit;
    config.inlineInput = instanceJson(jordanBlock(3, 1), Vector::unit(3, 2));
    config.orbitMode = OrbitMode::Forward;
    config.kMax = 4;
    const RunResult result = cli::run(config);
    REQUIRE(result.exitCode == 0);
    // norms C(k,2) + k + 1
    CHECK(result.output == "k,norm_num,norm_den,mode\n"
                           "0,1,1,forward\n"
                           "1,2,1,forward\n"
                           "2,4,1,forward\n"
                           "3,7,1,forward\n"
                           "4,11,1,forward\n");

    config.inlineInput = instanceJson(jordanBlock(2, 1), Vector::unit(2, 1));
    config.orbitMode = OrbitMode::Symmetric;
    config.kMax = 5;
    const RunResult symmetric = cli::run(config);
    REQUIRE(symmetric.exitCode == 0);
    CHECK(symmetric.output == "k,norm_num,norm_den,mode\n"
                              "0,2,1,symmetric\n"
                              "1,2,1,symmetric\n"
                              "2,2,1,symmetric\n"
                              "3,2,1,symmetric\n"
                              "4,2,1,symmetric\n"
                              "5,2,1,symmetric\n");

    config.inlineInput = instanceJson(jordanBlock(2, 1), Vector(2));
    const RunResult zero = cli::run(config);
    REQUIRE(zero.exitCode == 0);
    CHECK(zero.output.find("0,0,1,symmetric") != std::string::npos);

    config.format = "json";
    config.inlineInput = instanceJson(jordanBlock(2, 1), Vector::unit(2, 1));
    const RunResult asJson = cli::run(config);
    REQUIRE(asJson.exitCode == 0);
    CHECK(json::parse(asJson.output).at(0).at("norm") == "2");

    config.format = "tsv";
    CHECK(cli::run(config).exitCode == 2);
}

TEST_CASE("orbit defaults kmax to 2*dim+5") {
    RunConfig config;
    config.command = Command::Orbit;
    config.inlineInput = instanceJson(jordanBlock(3, 1), Vector::unit(3, 2));
    config.orbitMode = OrbitMode::Forward;
    const RunResult result = cli::run(config);
    REQUIRE(result.exitCode == 0);
    long rows = std::count(result.output.begin(), result.output.end(), '\n');
    CHECK(rows == 1 + (2 * 3 + 5) + 1); // header + k = 0..11
}

TEST_CASE("orbit accepts a spec instead of a matrix") {
    RunConfig config;
    config.command = Command::Orbit;
    json j{{"spec", json{{"eigenvalue", 1}, {"blocks", json::array({2})}}},
           {"vector", io::vectorToJson(Vector::unit(2, 1))}};
    config.inlineInput = j.dump();
    config.orbitMode = OrbitMode::Symmetric;
    config.kMax = 2;
    const RunResult result = cli::run(config);
    REQUIRE(result.exitCode == 0);
    CHECK(result.output.find("0,2,1,symmetric") != std::string::npos);
}

TEST_CASE("degree reports the profile") {
    RunConfig config;
    config.command = Command::Degree;
    config.inlineInput = instanceJson(jordanBlock(3, 1), Vector::unit(3, 2));
    config.orbitMode = OrbitMode::Forward;
    const RunResult result = cli::run(config);
    REQUIRE(result.exitCode == 0);
    const json out = json::parse(result.output);
    CHECK(out.at("mode") == "forward");
    CHECK(out.at("degree") == 2);
    CHECK(out.at("coordinateDegrees") == json::array({2, 1, 0}));

    config.inlineInput = instanceJson(jordanBlock(3, 1), Vector(3));
    const json zero = json::parse(cli::run(config).output);
    CHECK(zero.at("degree").is_null());
}

TEST_CASE("verify exit codes follow the contract") {
    CHECK(cli::run(verifyConfig(jordanBlock(3, 1), Vector::unit(3, 2), 2, Variant::Printed))
              .exitCode == 0);

    const RunResult counterexample =
        cli::run(verifyConfig(jordanBlock(4, 1), Vector::unit(4, 3), 2, Variant::Printed));
    CHECK(counterexample.exitCode == 1);
    const json report = json::parse(counterexample.output);
    CHECK(report.at("annihilated") == false);
    CHECK(io::vectorFromJson(report.at("witness")) == Vector::unit(4, 0));

    CHECK(cli::run(verifyConfig(jordanBlock(4, 1), Vector::unit(4, 3), 2, Variant::Derived))
              .exitCode == 0);
    CHECK(cli::run(verifyConfig(jordanBlock(4, 0), Vector::unit(4, 3), 2, Variant::Derived,
                                VerifyMode::Corollary))
              .exitCode == 0);
    CHECK(cli::run(verifyConfig(jordanBlock(4, 0), Vector::unit(4, 3), 2, Variant::Printed,
                                VerifyMode::Corollary))
              .exitCode == 1);

    // vacuous: hypothesis unmet is not a counterexample
    const RunResult vacuous =
        cli::run(verifyConfig(jordanBlock(5, 1), Vector::unit(5, 4), 1, Variant::Printed));
    CHECK(vacuous.exitCode == 0);
    CHECK(json::parse(vacuous.output).at("hypothesisSatisfied") == false);
}

TEST_CASE("input errors exit with status 2") {
    RunConfig config;
    config.command = Command::Verify;
    config.n = 2;

    config.inlineInput = "{not json";
    CHECK(cli::run(config).exitCode == 2);

    config.inlineInput = R"({"matrix":{"rows":1,"cols":1,"entries":[["1"]]}})";
    CHECK(cli::run(config).exitCode == 2); // vector missing

    config.inlineInput = instanceJson(jordanBlock(2, 0), Vector::unit(2, 1));
    CHECK(cli::run(config).exitCode == 2); // not unipotent

    config.inlineInput = instanceJson(jordanBlock(2, 1), Vector::unit(2, 1));
    config.n = 0;
    CHECK(cli::run(config).exitCode == 2); // N < 1

    config.n = 2;
    config.inputPath = "also-set";
    CHECK(cli::run(config).exitCode == 2); // both input forms

    RunConfig missing;
    missing.command = Command::Verify;
    missing.inlineInput = instanceJson(jordanBlock(2, 1), Vector::unit(2, 1));
    CHECK(cli::run(missing).exitCode == 2); // no N

    RunConfig noInput;
    noInput.command = Command::Gen;
    CHECK(cli::run(noInput).exitCode == 2);

    RunConfig badFile;
    badFile.command = Command::Gen;
    badFile.inputPath = "/nonexistent/spec.json";
    CHECK(cli::run(badFile).exitCode == 2);
}

TEST_CASE("selftest passes and is deterministic") {
    RunConfig config;
    config.command = Command::Selftest;
    config.dMax = 3;
    config.seedCount = 3;
    const RunResult first = cli::run(config);
    CHECK(first.exitCode == 0);
    CHECK(first.output.find("selftest: PASS") != std::string::npos);
    const RunResult second = cli::run(config);
    CHECK(first.output == second.output);

    RunConfig degenerate;
    degenerate.command = Command::Selftest;
    degenerate.dMax = 0;
    degenerate.seedCount = 1;
    const RunResult tiny = cli::run(degenerate);
    CHECK(tiny.exitCode == 0);
    CHECK(tiny.output.find("selftest: PASS") != std::string::npos);
}
