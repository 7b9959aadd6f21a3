#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hhsum/sequences.hpp"

using namespace hhsum;

static BigRational frac(long a, long b) { return BigRational(BigInt(a), BigInt(b)); }

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0, 1) == BigRational(0));
    CHECK(harmonic(5, 1) == frac(137, 60));
    CHECK(harmonic(4, 2) == frac(205, 144));
    CHECK(harmonic(4, 0) == BigRational(4));
    CHECK(harmonic(4, -2) == BigRational(30));
    CHECK(harmonic_alt(4, 1) == frac(7, 12));
    CHECK(harmonic_alt(3, 2) == frac(31, 36));
}

TEST_CASE("hyperharmonic numbers") {
    CHECK(hyperharmonic(3, 1, 1) == harmonic(3, 1));
    CHECK(hyperharmonic(3, 1, 2) == frac(13, 3));
    CHECK(hyperharmonic(0, 2, 3) == BigRational(0));
    for (std::uint64_t n = 1; n <= 30; ++n)
        CHECK(hyperharmonic(n, 2, 3) - hyperharmonic(n - 1, 2, 3) == hyperharmonic(n, 2, 2));
}

TEST_CASE("coefficient tables") {
    const CoeffTable& t2 = coeff_table(2);
    CHECK(t2.at(0, 0) == BigRational(1));
    CHECK(t2.at(0, 1) == BigRational(1));
    CHECK(t2.at(1, 0) == BigRational(-1));
    CHECK(t2.entries().size() == 3);
    CHECK_THROWS_AS(t2.at(2, 0), std::out_of_range);
    CHECK(coeff_table(3).at(0, 2) == frac(1, 2));
    CHECK(coeff_table(3).at(2, 0) == frac(1, 2));
    CHECK_THROWS(coeff_table(0));
}

TEST_CASE("decomposition reproduces hyperharmonic numbers exactly") {
    for (int r = 1; r <= 5; ++r)
        for (int p = 1; p <= 4; ++p)
            for (std::uint64_t n = 0; n <= 50; ++n) REQUIRE(hyperharmonic_via_coeffs(n, p, r) == hyperharmonic(n, p, r));
}
