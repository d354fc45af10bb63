#ifndef GH_CLI_HPP
#define GH_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gh/gelfand.hpp"
#include "gh/growth.hpp"

namespace gh::cli {

enum class Command { Gen, Orbit, Degree, Verify, Selftest };

struct RunConfig {
    Command command = Command::Selftest;
    std::optional<std::string> inputPath;   // "-" reads standard input
    std::optional<std::string> inlineInput; // JSON text passed directly
    std::optional<std::string> outputPath;  // unset: standard output
    OrbitMode orbitMode = OrbitMode::Forward;
    Variant variant = Variant::Derived;
    VerifyMode verifyMode = VerifyMode::Theorem;
    std::optional<long> n;                // verify
    std::optional<long> kMax;             // orbit; default 2*dim+5
    std::optional<std::uint64_t> seed;    // gen: overrides spec seed; selftest: base seed
    long dMax = 6;                        // selftest
    long seedCount = 50;                  // selftest
    std::optional<std::string> format;    // orbit: "csv" (default) or "json"
};

struct RunResult {
    // 0 = all checks passed / output produced; 1 = a checked conclusion
    // failed (counterexample) or selftest failure; 2 = usage or input error.
    int exitCode = 0;
    std::string output;      // payload for stdout or the output file
    std::string diagnostics; // error text for stderr
};

// Executes one command. Identical configs produce byte-identical output.
RunResult run(const RunConfig& config);

} // namespace gh::cli

#endif // GH_CLI_HPP
