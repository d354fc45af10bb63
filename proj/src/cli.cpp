#include "gh/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gh/errors.hpp"
#include "gh/io.hpp"
#include "gh/jordan.hpp"
#include "gh/matrix_functions.hpp"

namespace gh::cli {

namespace {

using io::json;

std::string readAll(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json loadInputJson(const RunConfig& config) {
    if (config.inputPath.has_value() == config.inlineInput.has_value()) {
        throw ArgumentError("provide exactly one of --input and --inline");
    }
    std::string text;
    if (config.inlineInput) {
        text = *config.inlineInput;
    } else if (*config.inputPath == "-") {
        text = readAll(std::cin);
    } else {
        std::ifstream in(*config.inputPath);
        if (!in) {
            throw ArgumentError("cannot read input file '" + *config.inputPath + "'");
        }
        text = readAll(in);
    }
    return json::parse(text);
}

struct Instance {
    Matrix matrix;
    Vector vector;
};

Instance loadInstance(const json& j) {
    if (!j.is_object() || !j.contains("vector")) {
        throw ArgumentError("instance JSON needs a \"vector\" and a \"matrix\" or \"spec\"");
    }
    if (j.contains("matrix")) {
        return {io::matrixFromJson(j.at("matrix")), io::vectorFromJson(j.at("vector"))};
    }
    if (j.contains("spec")) {
        const JordanSpec spec = io::jordanSpecFromJson(j.at("spec"));
        return {assemble(spec).matrix, io::vectorFromJson(j.at("vector"))};
    }
    throw ArgumentError("instance JSON needs a \"matrix\" or \"spec\" field");
}

RunResult runGen(const RunConfig& config) {
    JordanSpec spec = io::jordanSpecFromJson(loadInputJson(config));
    if (config.seed) {
        spec.conjugatorSeed = *config.seed;
    }
    const AssembledInstance assembled = assemble(spec);
    json out{{"matrix", io::matrixToJson(assembled.matrix)},
             {"conjugator", io::matrixToJson(assembled.conjugator)}};
    return {0, out.dump(2) + "\n", ""};
}

RunResult runOrbit(const RunConfig& config) {
    const Instance inst = loadInstance(loadInputJson(config));
    const long kMax = config.kMax.value_or(2L * inst.vector.dim() + 5);
    if (kMax < 0) {
        throw ArgumentError("--kmax must be nonnegative");
    }
    const std::string modeName = io::orbitModeToString(config.orbitMode);
    const std::vector<Vector> orbit =
        orbitPrefix(inst.matrix, inst.vector, static_cast<int>(kMax), config.orbitMode);

    const std::string format = config.format.value_or("csv");
    if (format == "csv") {
        std::ostringstream out;
        out << "k,norm_num,norm_den,mode\n";
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const ExactRational norm = vecNorm(orbit[k]);
            out << k << "," << norm.get_num().get_str() << "," << norm.get_den().get_str() << ","
                << modeName << "\n";
        }
        return {0, out.str(), ""};
    }
    if (format == "json") {
        json rows = json::array();
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            rows.push_back(json{{"k", k}, {"norm", io::rationalToString(vecNorm(orbit[k]))}});
        }
        return {0, rows.dump(2) + "\n", ""};
    }
    throw ArgumentError("unknown format '" + format + "', expected csv|json");
}

RunResult runDegree(const RunConfig& config) {
    const Instance inst = loadInstance(loadInputJson(config));
    const OrbitProfile profile = coordinatePolynomials(inst.matrix, inst.vector, config.orbitMode);
    json coords = json::array();
    for (const auto& c : profile.coordinates) {
        coords.push_back(io::degreeToJson(c.degree()));
    }
    json out{{"mode", io::orbitModeToString(config.orbitMode)},
             {"degree", io::degreeToJson(profile.degree)},
             {"coordinateDegrees", std::move(coords)}};
    return {0, out.dump(2) + "\n", ""};
}

RunResult runVerify(const RunConfig& config) {
    if (!config.n) {
        throw ArgumentError("verify requires --n");
    }
    const Instance inst = loadInstance(loadInputJson(config));
    const VerificationReport report =
        config.verifyMode == VerifyMode::Theorem
            ? verifyTheorem(inst.matrix, inst.vector, *config.n, config.variant)
            : verifyCorollary(inst.matrix, inst.vector, *config.n, config.variant);
    // A failed hypothesis makes the claim vacuous, not refuted.
    const int exitCode = (report.hypothesisSatisfied && !report.annihilated) ? 1 : 0;
    return {exitCode, io::reportToJson(report).dump(2) + "\n", ""};
}

// --- selftest -------------------------------------------------------------

struct SelftestState {
    std::ostringstream out;
    int passed = 0;
    int total = 0;

    void check(bool ok, const std::string& label, const std::string& detail = "") {
        ++total;
        if (ok) {
            ++passed;
            out << "ok " << label << "\n";
        } else {
            out << "FAIL " << label << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    }
};

std::string checkDichotomy(int dMax) {
    for (const DichotomyRow& row : dichotomyTable(dMax)) {
        const bool ok = row.forwardDegree == Degree(row.d) &&
                        row.symmetricDegree == Degree(predictedSymmetricDegree(row.d)) &&
                        row.localIndex == row.d + 1 && row.minimalExponent == row.d + 1;
        if (!ok) {
            return "row d=" + std::to_string(row.d);
        }
    }
    return "";
}

std::string checkClosedForms(int dMax, int kMax) {
    for (int d = 0; d <= dMax; ++d) {
        const Matrix block = jordanBlock(d + 1, 1);
        const Matrix inverse = neumannInverse(block);
        for (int k = 0; k <= kMax; ++k) {
            if (jordanPowerClosed(d, k, PowerDirection::Forward) != matpow(block, k) ||
                jordanPowerClosed(d, k, PowerDirection::Inverse) != matpow(inverse, k)) {
                return "d=" + std::to_string(d) + " k=" + std::to_string(k);
            }
        }
    }
    return "";
}

Vector applyRepeated(const Matrix& m, int e, Vector v) {
    for (int t = 0; t < e; ++t) {
        v = m * v;
    }
    return v;
}

std::string checkProofChain(std::uint64_t baseSeed, long count) {
    for (long i = 0; i < count; ++i) {
        const JordanSpec spec = seededSpec(baseSeed + 2 * static_cast<std::uint64_t>(i), 8, 1);
        const Matrix a = assemble(spec).matrix;
        const Vector x =
            seededVector(baseSeed + 2 * static_cast<std::uint64_t>(i) + 1, spec.dimension());
        const std::string tag = "instance " + std::to_string(i);
        if (!factorizationCheck(a)) {
            return tag + " factorization";
        }
        const int m = localNilpotencyIndex(a, x);
        const int dimN = symmetricSpanBasis(a, x).dimension;
        if (dimN != (m + 1) / 2) {
            return tag + " dim N != ceil(m/2)";
        }
        const Matrix t = averagedOperator(a);
        const Matrix identity = Matrix::identity(a.rows());
        if (!applyRepeated(t - identity, dimN, x).isZero()) {
            return tag + " (T-I)^dimN x != 0";
        }
        if (!applyRepeated(a - identity, 2 * dimN, x).isZero()) {
            return tag + " (A-I)^(2 dimN) x != 0";
        }
        const Degree fwd = coordinatePolynomials(a, x, OrbitMode::Forward).degree;
        const Degree sym = coordinatePolynomials(a, x, OrbitMode::Symmetric).degree;
        if (!fwd || !sym || *fwd > *sym + 1) {
            return tag + " forward degree exceeds symmetric degree + 1";
        }
    }
    return "";
}

std::string checkDerivedTheorem(std::uint64_t baseSeed, long count) {
    for (long i = 0; i < count; ++i) {
        const JordanSpec spec = seededSpec(baseSeed + 2 * static_cast<std::uint64_t>(i), 8, 1);
        const Matrix a = assemble(spec).matrix;
        const Vector x =
            seededVector(baseSeed + 2 * static_cast<std::uint64_t>(i) + 1, spec.dimension());
        const Degree degree = coordinatePolynomials(a, x, OrbitMode::Symmetric).degree;
        const long d = degree ? *degree : 0;
        for (long n = std::max(d, 1L); n <= d + 3; ++n) {
            const VerificationReport report = verifyTheorem(a, x, n, Variant::Derived);
            if (!report.annihilated || !report.hypothesisSatisfied) {
                return "instance " + std::to_string(i) + " N=" + std::to_string(n);
            }
        }
    }
    return "";
}

std::string checkPrintedFixtures() {
    // Even N: the printed exponent N+1 is refuted by (J_{N+2}(1), e_{N+2}).
    const VerificationReport even =
        verifyTheorem(jordanBlock(4, 1), Vector::unit(4, 3), 2, Variant::Printed);
    if (even.annihilated || !even.witness || *even.witness != Vector::unit(4, 0)) {
        return "theorem N=2 fixture";
    }
    const VerificationReport evenCor =
        verifyCorollary(jordanBlock(4, 0), Vector::unit(4, 3), 2, Variant::Printed);
    if (evenCor.annihilated || !evenCor.witness || *evenCor.witness != Vector::unit(4, 0)) {
        return "corollary N=2 fixture";
    }
    // Odd N: the printed exponent N+2 holds (it exceeds the sharp N+1).
    for (long n : {1L, 3L, 5L}) {
        const int size = static_cast<int>(n) + 1;
        const VerificationReport odd = verifyTheorem(jordanBlock(size, 1),
                                                     Vector::unit(size, size - 1), n,
                                                     Variant::Printed);
        if (!odd.annihilated) {
            return "theorem odd N=" + std::to_string(n) + " fixture";
        }
    }
    return "";
}

std::string checkCorollaryCalculus(std::uint64_t baseSeed, long count) {
    for (long i = 0; i < count; ++i) {
        const JordanSpec spec =
            seededSpec(baseSeed + 1000000 + 2 * static_cast<std::uint64_t>(i), 8, 0);
        const Matrix q = assemble(spec).matrix;
        const Vector x = seededVector(baseSeed + 1000000 + 2 * static_cast<std::uint64_t>(i) + 1,
                                      spec.dimension());
        const std::string tag = "instance " + std::to_string(i);
        const Matrix a = expI(q);
        if (logUnipotent(a).scaled(-GaussianRational::i()) != q) {
            return tag + " log/exp round trip";
        }
        const Matrix aInv = neumannInverse(a);
        for (int k = 0; k <= 12; ++k) {
            if (matpow(a, k) + matpow(aInv, k) != cosK(q, k).scaled(GaussianRational(2))) {
                return tag + " cos identity k=" + std::to_string(k);
            }
        }
        const Degree degree = coordinatePolynomials(q, x, OrbitMode::Cosine).degree;
        const long d = degree ? *degree : 0;
        for (long n = std::max(d, 1L); n <= d + 3; ++n) {
            const VerificationReport report = verifyCorollary(q, x, n, Variant::Derived);
            if (!report.annihilated || !report.hypothesisSatisfied) {
                return tag + " N=" + std::to_string(n);
            }
        }
    }
    return "";
}

RunResult runSelftest(const RunConfig& config) {
    if (config.dMax < 0) {
        throw ArgumentError("--dmax must be nonnegative");
    }
    if (config.seedCount < 0) {
        throw ArgumentError("--seeds must be nonnegative");
    }
    const std::uint64_t baseSeed = config.seed.value_or(1);
    const int dMax = static_cast<int>(config.dMax);

    SelftestState state;
    state.out << "selftest dmax=" << dMax << " seeds=" << config.seedCount
              << " base-seed=" << baseSeed << "\n";

    std::string detail = checkDichotomy(dMax);
    state.check(detail.empty(), "dichotomy table rows d=0.." + std::to_string(dMax), detail);

    detail = checkClosedForms(dMax, 60);
    state.check(detail.empty(),
                "closed-form powers equal matpow for d=0.." + std::to_string(dMax) + ", k=0..60",
                detail);

    detail = checkProofChain(baseSeed, config.seedCount);
    state.check(detail.empty(),
                "proof-chain identities on " + std::to_string(config.seedCount) +
                    " unipotent instances",
                detail);

    detail = checkDerivedTheorem(baseSeed, config.seedCount);
    state.check(detail.empty(),
                "derived-variant theorem checks on " + std::to_string(config.seedCount) +
                    " unipotent instances",
                detail);

    detail = checkPrintedFixtures();
    state.check(detail.empty(), "printed-variant parity fixtures", detail);

    detail = checkCorollaryCalculus(baseSeed, config.seedCount);
    state.check(detail.empty(),
                "corollary calculus on " + std::to_string(config.seedCount) +
                    " nilpotent instances",
                detail);

    const bool allOk = state.passed == state.total;
    state.out << "selftest: " << (allOk ? "PASS" : "FAIL") << " (" << state.passed << "/"
              << state.total << " checks)\n";
    return {allOk ? 0 : 1, state.out.str(), ""};
}

} // namespace

RunResult run(const RunConfig& config) {
    try {
        switch (config.command) {
        case Command::Gen:
            return runGen(config);
        case Command::Orbit:
            return runOrbit(config);
        case Command::Degree:
            return runDegree(config);
        case Command::Verify:
            return runVerify(config);
        case Command::Selftest:
            return runSelftest(config);
        }
        throw ArgumentError("unknown command");
    } catch (const std::exception& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace gh::cli
