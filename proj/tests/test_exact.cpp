#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hhsum/exact.hpp"

using namespace hhsum;

TEST_CASE("rationals are kept in lowest terms") {
    const BigRational q(BigInt(6), BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.to_string() == "-3/2");
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(BigRational(0).inverse(), std::domain_error);
    CHECK(BigRational(BigInt(2), BigInt(3)).pow(3) == BigRational(BigInt(8), BigInt(27)));
    CHECK((BigRational(1) / BigRational(3) + BigRational(BigInt(1), BigInt(6))) == BigRational(BigInt(1), BigInt(2)));
}

TEST_CASE("binomial, pochhammer and factorial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(pochhammer(BigRational(BigInt(1), BigInt(2)), 3) == BigRational(BigInt(15), BigInt(8)));
    CHECK(pochhammer(BigRational(4), 0) == BigRational(1));
    CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("Bernoulli numbers with B1 = +1/2") {
    CHECK(bernoulli_plus(0) == BigRational(1));
    CHECK(bernoulli_plus(1) == BigRational(BigInt(1), BigInt(2)));
    CHECK(bernoulli_plus(2) == BigRational(BigInt(1), BigInt(6)));
    CHECK(bernoulli_plus(3) == BigRational(0));
    CHECK(bernoulli_plus(12) == BigRational(BigInt(-691), BigInt(2730)));
    CHECK(bernoulli_plus(30) == BigRational(BigInt("8615841276005"), BigInt(14322)));
    for (unsigned k = 0; k <= 30; ++k) {
        BigRational acc;
        for (unsigned j = 0; j <= k; ++j) acc += BigRational(binomial(k + 1, j)) * bernoulli_plus(j);
        CHECK(acc == BigRational(static_cast<long>(k) + 1));
    }
}

TEST_CASE("Faulhaber sums agree with direct summation") {
    CHECK(faulhaber_sum(10, 3) == BigRational(3025));
    CHECK(faulhaber_sum(0, 4) == BigRational(0));
    CHECK(faulhaber_sum(100, 0) == BigRational(100));
    for (unsigned k = 0; k <= 10; ++k) {
        BigRational direct;
        for (std::uint64_t n = 1; n <= 200; ++n) {
            direct += BigRational(BigInt(static_cast<unsigned long>(n))).pow(k);
            REQUIRE(faulhaber_sum(n, k) == direct);
        }
    }
    const auto c = faulhaber_coeffs(2);  // n^3/3 + n^2/2 + n/6
    REQUIRE(c.size() == 3);
    CHECK(c[0] == BigRational(BigInt(1), BigInt(3)));
    CHECK(c[1] == BigRational(BigInt(1), BigInt(2)));
    CHECK(c[2] == BigRational(BigInt(1), BigInt(6)));
}
