#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gh/errors.hpp"
#include "gh/io.hpp"
#include "test_support.hpp"

using namespace gh;
using io::json;

TEST_CASE("rational text encoding") {
    CHECK(io::rationalToString(makeRational(3, 2)) == "3/2");
    CHECK(io::rationalToString(makeRational(-5, 1)) == "-5");
    CHECK(io::rationalToString(ExactRational(0)) == "0");

    CHECK(io::parseRational("3/2") == makeRational(3, 2));
    CHECK(io::parseRational("-7") == -7);
    CHECK(io::parseRational("2/4") == makeRational(1, 2));
    CHECK(io::parseRational("-3/-6") == makeRational(1, 2));
    CHECK_THROWS_AS(io::parseRational("1/0"), ArgumentError);
    CHECK_THROWS_AS(io::parseRational("abc"), ArgumentError);
    CHECK_THROWS_AS(io::parseRational(""), ArgumentError);
    CHECK_THROWS_AS(io::parseRational("1/2/3"), ArgumentError);
}

TEST_CASE("scalar JSON forms") {
    const GaussianRational z(makeRational(3, 2), makeRational(-1, 3));
    const json j = io::scalarToJson(z);
    CHECK(j.at("re") == "3/2");
    CHECK(j.at("im") == "-1/3");
    CHECK(io::scalarFromJson(j) == z);

    CHECK(io::scalarFromJson(json("5/3")) == GaussianRational(makeRational(5, 3)));
    CHECK(io::scalarFromJson(json(-4)) == GaussianRational(-4));
    CHECK(io::scalarFromJson(json{{"im", "1"}}) == GaussianRational::i());
    CHECK_THROWS_AS(io::scalarFromJson(json(1.5)), ArgumentError);
    CHECK_THROWS_AS(io::scalarFromJson(json::array()), ArgumentError);
}

TEST_CASE("matrix and vector JSON round trips") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Matrix m = ghtest::denseSeededMatrix(seed, 3);
        CHECK(io::matrixFromJson(io::matrixToJson(m)) == m);
    }
    const Vector x = seededVector(3, 5);
    CHECK(io::vectorFromJson(io::vectorToJson(x)) == x);

    CHECK_THROWS_AS(io::matrixFromJson(json{{"rows", 2}, {"cols", 2}}), ArgumentError);
    CHECK_THROWS_AS(io::matrixFromJson(json{{"rows", 2},
                                            {"cols", 2},
                                            {"entries", json::array({json::array({1, 2})})}}),
                    ArgumentError);
    CHECK_THROWS_AS(io::vectorFromJson(json{{"dim", 3}, {"entries", json::array({1, 2})}}),
                    ArgumentError);
}

TEST_CASE("jordan spec JSON") {
    const JordanSpec spec{1, {3, 2, 1}, 99};
    const JordanSpec parsed = io::jordanSpecFromJson(io::jordanSpecToJson(spec));
    CHECK(parsed.eigenvalue == 1);
    CHECK(parsed.blockSizes == std::vector<int>{3, 2, 1});
    CHECK(parsed.conjugatorSeed == std::optional<std::uint64_t>(99));

    const JordanSpec bare = io::jordanSpecFromJson(json::parse(R"({"eigenvalue":0,"blocks":[2]})"));
    CHECK_FALSE(bare.conjugatorSeed.has_value());

    CHECK_THROWS_AS(io::jordanSpecFromJson(json::parse(R"({"eigenvalue":1,"blocks":[]})")),
                    ArgumentError);
    CHECK_THROWS_AS(io::jordanSpecFromJson(json::parse(R"({"eigenvalue":2,"blocks":[2]})")),
                    ArgumentError);
    CHECK_THROWS_AS(io::jordanSpecFromJson(json::parse(R"({"blocks":[2]})")), ArgumentError);
}

TEST_CASE("degree JSON uses null for minus infinity") {
    CHECK(io::degreeToJson(Degree(3)) == json(3));
    CHECK(io::degreeToJson(kDegreeMinusInfinity).is_null());
}

TEST_CASE("verification report JSON") {
    const VerificationReport report =
        verifyTheorem(jordanBlock(4, 1), Vector::unit(4, 3), 2, Variant::Printed);
    const json j = io::reportToJson(report);
    CHECK(j.at("mode") == "theorem");
    CHECK(j.at("variant") == "printed");
    CHECK(j.at("measuredDegree") == 2);
    CHECK(j.at("localIndex") == 4);
    CHECK(j.at("testedN") == 2);
    CHECK(j.at("conclusionExponent") == 3);
    CHECK(j.at("hypothesisSatisfied") == true);
    CHECK(j.at("annihilated") == false);
    CHECK(j.at("trivialInput") == false);
    CHECK(io::vectorFromJson(j.at("witness")) == Vector::unit(4, 0));
}

TEST_CASE("mode and variant names") {
    CHECK(io::parseOrbitMode("forward") == OrbitMode::Forward);
    CHECK(io::parseOrbitMode("cosine") == OrbitMode::Cosine);
    CHECK(io::orbitModeToString(OrbitMode::Symmetric) == "symmetric");
    CHECK_THROWS_AS(io::parseOrbitMode("sideways"), ArgumentError);
    CHECK(io::parseVariant("printed") == Variant::Printed);
    CHECK_THROWS_AS(io::parseVariant("sharp"), ArgumentError);
    CHECK(io::parseVerifyMode("corollary") == VerifyMode::Corollary);
    CHECK_THROWS_AS(io::parseVerifyMode("lemma"), ArgumentError);
}
