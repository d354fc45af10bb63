#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gh/errors.hpp"
#include "gh/growth.hpp"
#include "gh/jordan.hpp"
#include "gh/matrix_functions.hpp"
#include "test_support.hpp"

using namespace gh;
using ghtest::gi;

namespace {

// e^{iQ} with kQ substituted, for the homomorphism check.
Matrix expIScaled(const Matrix& q, long k) {
    return expI(q.scaled(GaussianRational(ExactRational(k))));
}

} // namespace

TEST_CASE("expI examples") {
    CHECK(expI(Matrix::zero(2, 2)) == Matrix::identity(2));

    const Matrix a2 = expI(jordanBlock(2, 0));
    CHECK(a2(0, 0) == GaussianRational(1));
    CHECK(a2(0, 1) == GaussianRational::i());
    CHECK(a2(1, 1) == GaussianRational(1));

    const Matrix a3 = expI(jordanBlock(3, 0));
    CHECK(a3(0, 1) == GaussianRational::i());
    CHECK(a3(0, 2) == GaussianRational(makeRational(-1, 2)));
    CHECK(a3(1, 2) == GaussianRational::i());
    CHECK(isUnipotent(a3));

    CHECK_THROWS_AS(expI(jordanBlock(2, 1)), SpectrumError);
}

TEST_CASE("logUnipotent examples") {
    CHECK(logUnipotent(Matrix::identity(3)) == Matrix::zero(3, 3));

    Matrix a(2, 2);
    a(0, 0) = GaussianRational(1);
    a(0, 1) = GaussianRational::i();
    a(1, 1) = GaussianRational(1);
    Matrix expected(2, 2);
    expected(0, 1) = GaussianRational::i();
    CHECK(logUnipotent(a) == expected);

    CHECK(logUnipotent(jordanBlock(2, 1)) == jordanBlock(2, 0));
    CHECK_THROWS_AS(logUnipotent(jordanBlock(2, 0)), SpectrumError);
}

TEST_CASE("cosK examples") {
    const Matrix q4 = jordanBlock(4, 0);
    CHECK(cosK(q4, 0) == Matrix::identity(4));
    for (int k : {0, 1, 2, 7}) {
        CHECK(cosK(jordanBlock(2, 0), k) == Matrix::identity(2));
    }
    for (long k : {1L, 3L, 10L}) {
        CHECK(cosK(q4, k)(0, 2) == GaussianRational(makeRational(-k * k, 2)));
    }
    CHECK_THROWS_AS(cosK(jordanBlock(3, 1), 2), SpectrumError);
}

TEST_CASE("log inverts expI on seeded nilpotent matrices") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Matrix q = assemble(seededSpec(seed * 13, 8, 0)).matrix;
        const Matrix a = expI(q);
        CHECK(isUnipotent(a));
        CHECK(logUnipotent(a).scaled(-GaussianRational::i()) == q);
    }
}

TEST_CASE("cosine halves the symmetric power sum") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Matrix q = assemble(seededSpec(seed * 17 + 3, 6, 0)).matrix;
        const Matrix a = expI(q);
        const Matrix aInv = neumannInverse(a);
        for (int k = 0; k <= 25; ++k) {
            CHECK(matpow(a, k) + matpow(aInv, k) == cosK(q, k).scaled(GaussianRational(2)));
        }
    }
}

TEST_CASE("expI is a power homomorphism") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Matrix q = assemble(seededSpec(seed * 29 + 1, 6, 0)).matrix;
        const Matrix a = expI(q);
        CHECK(a * q == q * a);
        for (long k : {0L, 1L, 2L, 7L, 20L}) {
            CHECK(matpow(a, k) == expIScaled(q, k));
        }
    }
}

TEST_CASE("cosine orbit coordinates use only even powers") {
    const Matrix q = assemble(seededSpec(101, 7, 0)).matrix;
    const Vector x = seededVector(102, q.rows());
    const OrbitProfile profile = coordinatePolynomials(q, x, OrbitMode::Cosine);
    for (const auto& coord : profile.coordinates) {
        for (const Polynomial* part : {&coord.realPart, &coord.imagPart}) {
            const auto& coeffs = part->coefficients();
            for (std::size_t power = 1; power < coeffs.size(); power += 2) {
                CHECK(coeffs[power] == 0);
            }
        }
    }
}
