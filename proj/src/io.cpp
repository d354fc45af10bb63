#include "gh/io.hpp"

#include <cstdint>

#include "gh/errors.hpp"

namespace gh::io {

std::string rationalToString(const ExactRational& q) {
    return q.get_str();
}

ExactRational parseRational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return ExactRational(ExactInteger(text));
        }
        const ExactInteger num(text.substr(0, slash));
        const ExactInteger den(text.substr(slash + 1));
        return makeRational(num, den);
    } catch (const ArgumentError&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw ArgumentError("malformed rational '" + text + "'");
    }
}

namespace {

ExactRational rationalFromJson(const json& j) {
    if (j.is_string()) {
        return parseRational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return ExactRational(static_cast<long>(j.get<std::int64_t>()));
    }
    throw ArgumentError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

} // namespace

json scalarToJson(const GaussianRational& z) {
    return json{{"re", rationalToString(z.re())}, {"im", rationalToString(z.im())}};
}

GaussianRational scalarFromJson(const json& j) {
    if (j.is_object()) {
        ExactRational re(0);
        ExactRational im(0);
        if (j.contains("re")) {
            re = rationalFromJson(j.at("re"));
        }
        if (j.contains("im")) {
            im = rationalFromJson(j.at("im"));
        }
        return {re, im};
    }
    return {rationalFromJson(j), ExactRational(0)};
}

json matrixToJson(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(scalarToJson(m(i, j)));
        }
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrixFromJson(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw ArgumentError("matrix JSON needs fields rows, cols, entries");
    }
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    if (rows < 1 || cols < 1) {
        throw ArgumentError("matrix JSON: dimensions must be positive");
    }
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
        throw ArgumentError("matrix JSON: entries must hold one array per row");
    }
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw ArgumentError("matrix JSON: row length disagrees with cols");
        }
        for (int c = 0; c < cols; ++c) {
            m(i, c) = scalarFromJson(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

json vectorToJson(const Vector& v) {
    json entries = json::array();
    for (int i = 0; i < v.dim(); ++i) {
        entries.push_back(scalarToJson(v[i]));
    }
    return json{{"dim", v.dim()}, {"entries", std::move(entries)}};
}

Vector vectorFromJson(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw ArgumentError("vector JSON needs fields dim, entries");
    }
    const int dim = j.at("dim").get<int>();
    const json& entries = j.at("entries");
    if (dim < 1 || !entries.is_array() || static_cast<int>(entries.size()) != dim) {
        throw ArgumentError("vector JSON: entries length disagrees with dim");
    }
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v[i] = scalarFromJson(entries[static_cast<std::size_t>(i)]);
    }
    return v;
}

json jordanSpecToJson(const JordanSpec& spec) {
    json j{{"eigenvalue", spec.eigenvalue}, {"blocks", spec.blockSizes}};
    if (spec.conjugatorSeed) {
        j["seed"] = *spec.conjugatorSeed;
    }
    return j;
}

JordanSpec jordanSpecFromJson(const json& j) {
    if (!j.is_object() || !j.contains("eigenvalue") || !j.contains("blocks")) {
        throw ArgumentError("Jordan spec JSON needs fields eigenvalue, blocks");
    }
    JordanSpec spec;
    spec.eigenvalue = j.at("eigenvalue").get<int>();
    const json& blocks = j.at("blocks");
    if (!blocks.is_array()) {
        throw ArgumentError("Jordan spec JSON: blocks must be an array");
    }
    for (const auto& b : blocks) {
        spec.blockSizes.push_back(b.get<int>());
    }
    if (j.contains("seed") && !j.at("seed").is_null()) {
        spec.conjugatorSeed = j.at("seed").get<std::uint64_t>();
    }
    spec.validate();
    return spec;
}

json degreeToJson(const Degree& d) {
    if (!d.has_value()) {
        return nullptr;
    }
    return *d;
}

json reportToJson(const VerificationReport& report) {
    json j{
        {"mode", verifyModeToString(report.mode)},
        {"variant", variantToString(report.variant)},
        {"measuredDegree", degreeToJson(report.measuredDegree)},
        {"localIndex", report.localIndex},
        {"testedN", report.testedN},
        {"conclusionExponent", report.conclusionExponent},
        {"hypothesisSatisfied", report.hypothesisSatisfied},
        {"annihilated", report.annihilated},
        {"trivialInput", report.trivialInput},
    };
    j["witness"] = report.witness ? vectorToJson(*report.witness) : json(nullptr);
    return j;
}

std::string orbitModeToString(OrbitMode mode) {
    switch (mode) {
    case OrbitMode::Forward:
        return "forward";
    case OrbitMode::Inverse:
        return "inverse";
    case OrbitMode::Symmetric:
        return "symmetric";
    case OrbitMode::Cosine:
        return "cosine";
    }
    throw ArgumentError("unknown orbit mode");
}

OrbitMode parseOrbitMode(const std::string& text) {
    if (text == "forward") {
        return OrbitMode::Forward;
    }
    if (text == "inverse") {
        return OrbitMode::Inverse;
    }
    if (text == "symmetric") {
        return OrbitMode::Symmetric;
    }
    if (text == "cosine") {
        return OrbitMode::Cosine;
    }
    throw ArgumentError("unknown orbit mode '" + text +
                        "', expected forward|inverse|symmetric|cosine");
}

std::string variantToString(Variant variant) {
    return variant == Variant::Printed ? "printed" : "derived";
}

Variant parseVariant(const std::string& text) {
    if (text == "printed") {
        return Variant::Printed;
    }
    if (text == "derived") {
        return Variant::Derived;
    }
    throw ArgumentError("unknown variant '" + text + "', expected printed|derived");
}

std::string verifyModeToString(VerifyMode mode) {
    return mode == VerifyMode::Theorem ? "theorem" : "corollary";
}

VerifyMode parseVerifyMode(const std::string& text) {
    if (text == "theorem") {
        return VerifyMode::Theorem;
    }
    if (text == "corollary") {
        return VerifyMode::Corollary;
    }
    throw ArgumentError("unknown mode '" + text + "', expected theorem|corollary");
}

} // namespace gh::io
