#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gh/errors.hpp"
#include "gh/scalars.hpp"
#include "test_support.hpp"

using namespace gh;
using ghtest::gi;

TEST_CASE("binomial small values") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(60, 30) == ExactInteger("118264581564861424"));
}

TEST_CASE("binomial rejects negative arguments") {
    CHECK_THROWS_AS(binomial(-1, 2), ArgumentError);
    CHECK_THROWS_AS(binomial(4, -1), ArgumentError);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
    for (long k = 1; k <= 60; ++k) {
        for (long j = 1; j <= k; ++j) {
            CHECK(binomial(k, j) == binomial(k - 1, j - 1) + binomial(k - 1, j));
        }
    }
}

TEST_CASE("rationals are stored canonically") {
    const ExactRational a = makeRational(2, -4);
    const ExactRational b = makeRational(-2, 4);
    CHECK(a == b);
    CHECK(a.get_num() == -1);
    CHECK(a.get_den() == 2);
    CHECK_THROWS_AS(makeRational(1, 0), ArgumentError);
}

TEST_CASE("abs1 examples") {
    CHECK(abs1(GaussianRational(makeRational(3, 2))) == makeRational(3, 2));
    CHECK(abs1(GaussianRational()) == 0);
    CHECK(abs1(gi(-1, 2)) == 3);
}

TEST_CASE("abs1 norm bounds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto m = ghtest::denseSeededMatrix(seed, 2);
        const GaussianRational z = m(0, 0) + gi(1, 0); // nudge away from frequent zeros
        const GaussianRational w = m(1, 1) + gi(0, 1);
        CHECK(abs1(z * w) <= 2 * abs1(z) * abs1(w));
        CHECK(abs1(z + w) <= abs1(z) + abs1(w));
    }
}

TEST_CASE("gaussian rational field operations") {
    const GaussianRational z(makeRational(3, 2), makeRational(-1, 3));
    CHECK(z * z.conj() == GaussianRational(z.re() * z.re() + z.im() * z.im()));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z + (-z) == GaussianRational());
    CHECK_THROWS_AS(GaussianRational().inverse(), ArgumentError);

    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto m = ghtest::denseSeededMatrix(seed, 3);
        const GaussianRational a = m(0, 0);
        const GaussianRational b = m(1, 1);
        const GaussianRational c = m(2, 2);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!c.isZero()) {
            CHECK(a / c * c == a);
        }
    }
}
