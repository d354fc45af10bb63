// Command-line front end: assembles Jordan-type instances, tabulates exact
// orbit norms, measures growth degrees, and verifies the growth/nilpotency
// dichotomy. Exit status: 0 pass, 1 counterexample found, 2 usage or input
// error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gh/cli.hpp"
#include "gh/errors.hpp"
#include "gh/io.hpp"

namespace {

struct RawOptions {
    std::string input;
    std::string inlineJson;
    std::string output;
    std::string mode;
    std::string variant = "derived";
    std::string format;
    long n = 0;
    long kMax = -1;
    std::uint64_t seed = 0;
    bool seedSet = false;
    long dMax = 6;
    long seedCount = 50;
};

void addInstanceOptions(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("-i,--input", raw.input, "input JSON file, or - for stdin");
    cmd->add_option("--inline", raw.inlineJson, "input JSON given inline");
    cmd->add_option("-o,--output", raw.output, "output file (default: stdout)");
}

int writeResult(const gh::cli::RunResult& result, const std::string& outputPath) {
    if (!result.diagnostics.empty()) {
        std::cerr << result.diagnostics;
    }
    if (result.output.empty()) {
        return result.exitCode;
    }
    if (outputPath.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(outputPath, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write output file '" << outputPath << "'\n";
            return 2;
        }
        out << result.output;
    }
    return result.exitCode;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of unipotent orbit growth and nilpotency dichotomies"};
    app.require_subcommand(1);

    RawOptions raw;

    CLI::App* gen = app.add_subcommand("gen", "assemble a matrix from a Jordan block spec");
    addInstanceOptions(gen, raw);
    gen->add_option("--seed", raw.seed, "override the conjugator seed")
        ->each([&raw](const std::string&) { raw.seedSet = true; });

    CLI::App* orbit = app.add_subcommand("orbit", "tabulate exact orbit norms as CSV");
    addInstanceOptions(orbit, raw);
    orbit->add_option("--mode", raw.mode, "forward|inverse|symmetric|cosine (default: forward)");
    orbit->add_option("--kmax", raw.kMax, "largest k (default: 2*dim+5)");
    orbit->add_option("--format", raw.format, "csv|json (default: csv)");

    CLI::App* degree = app.add_subcommand("degree", "measure the exact orbit growth degree");
    addInstanceOptions(degree, raw);
    degree->add_option("--mode", raw.mode, "forward|inverse|symmetric|cosine (default: forward)");

    CLI::App* verify = app.add_subcommand("verify", "check a growth-to-nilpotency conclusion");
    addInstanceOptions(verify, raw);
    verify->add_option("--n", raw.n, "growth bound exponent N >= 1")->required();
    verify->add_option("--variant", raw.variant, "printed|derived (default: derived)");
    verify->add_option("--mode", raw.mode, "theorem|corollary (default: theorem)");

    CLI::App* selftest = app.add_subcommand("selftest", "regenerate the dichotomy table and run "
                                                        "the exact identity suite");
    selftest->add_option("-o,--output", raw.output, "output file (default: stdout)");
    selftest->add_option("--dmax", raw.dMax, "largest block degree d (default: 6)");
    selftest->add_option("--seeds", raw.seedCount, "number of seeded instances (default: 50)");
    selftest->add_option("--seed", raw.seed, "base seed (default: 1)")
        ->each([&raw](const std::string&) { raw.seedSet = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    gh::cli::RunConfig config;
    try {
        if (gen->parsed()) {
            config.command = gh::cli::Command::Gen;
        } else if (orbit->parsed()) {
            config.command = gh::cli::Command::Orbit;
            config.orbitMode =
                raw.mode.empty() ? gh::OrbitMode::Forward : gh::io::parseOrbitMode(raw.mode);
            if (raw.kMax >= 0) {
                config.kMax = raw.kMax;
            }
            if (!raw.format.empty()) {
                config.format = raw.format;
            }
        } else if (degree->parsed()) {
            config.command = gh::cli::Command::Degree;
            config.orbitMode =
                raw.mode.empty() ? gh::OrbitMode::Forward : gh::io::parseOrbitMode(raw.mode);
        } else if (verify->parsed()) {
            config.command = gh::cli::Command::Verify;
            config.n = raw.n;
            config.variant = gh::io::parseVariant(raw.variant);
            config.verifyMode =
                raw.mode.empty() ? gh::VerifyMode::Theorem : gh::io::parseVerifyMode(raw.mode);
        } else {
            config.command = gh::cli::Command::Selftest;
            config.dMax = raw.dMax;
            config.seedCount = raw.seedCount;
        }
        if (!raw.input.empty()) {
            config.inputPath = raw.input;
        }
        if (!raw.inlineJson.empty()) {
            config.inlineInput = raw.inlineJson;
        }
        if (raw.seedSet) {
            config.seed = raw.seed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return writeResult(gh::cli::run(config), raw.output);
}
