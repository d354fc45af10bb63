#ifndef GH_IO_HPP
#define GH_IO_HPP

#include <string>

#include "json.hpp"

#include "gh/gelfand.hpp"
#include "gh/growth.hpp"
#include "gh/jordan.hpp"
#include "gh/matrix.hpp"

namespace gh::io {

using nlohmann::json;

// Rationals travel as "p/q", or "p" when the denominator is 1.
std::string rationalToString(const ExactRational& q);
ExactRational parseRational(const std::string& text);

// Scalars are objects {"re": "p/q", "im": "p/q"}. Parsing also accepts a
// bare rational string or a JSON integer as a real value.
json scalarToJson(const GaussianRational& z);
GaussianRational scalarFromJson(const json& j);

// {"rows": r, "cols": c, "entries": [[scalar, ...], ...]}
json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const json& j);

// {"dim": n, "entries": [scalar, ...]}
json vectorToJson(const Vector& v);
Vector vectorFromJson(const json& j);

// {"eigenvalue": 0|1, "blocks": [n, ...], "seed": optional integer}
json jordanSpecToJson(const JordanSpec& spec);
JordanSpec jordanSpecFromJson(const json& j);

json degreeToJson(const Degree& d); // number, or null for minus infinity

json reportToJson(const VerificationReport& report);

std::string orbitModeToString(OrbitMode mode);
OrbitMode parseOrbitMode(const std::string& text);
std::string variantToString(Variant variant);
Variant parseVariant(const std::string& text);
std::string verifyModeToString(VerifyMode mode);
VerifyMode parseVerifyMode(const std::string& text);

} // namespace gh::io

#endif // GH_IO_HPP
