#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hhsum/closed_forms.hpp"
#include "hhsum/constants.hpp"
#include "hhsum/errors.hpp"
#include "near.hpp"

using namespace hhsum;
using testing_util::gap;

TEST_CASE("spec validation names the violated hypothesis") {
    CHECK_NOTHROW(SumSpec::linear(1, 1, 2, 1, false).validate());
    try {
        SumSpec::linear(1, 3, 2, 1, false).validate();
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("m >= s") != std::string::npos);
    }
    try {
        SumSpec::quadratic(1, 2, 1, 2, 2, 1, true).validate();
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("m >= s1+s2-1") != std::string::npos);
    }
    CHECK_THROWS_AS(SumSpec::linear(1, 1, 2, 0, false).validate(), DomainError);
    CHECK(SumSpec::linear(2, 2, 3, 2, false).id() == "lin+:p=2,s=2,m=3,k=2,alt=0");
}

TEST_CASE("partial fractions of the reciprocal binomial") {
    const auto w = recip_binomial_weights(3);
    REQUIRE(w.size() == 3);
    CHECK(w[0].second == BigRational(3));
    CHECK(w[1].second == BigRational(-6));
    CHECK(w[2].second == BigRational(3));
    for (int k = 1; k <= 12; ++k)
        for (std::uint64_t n = 1; n <= 100; ++n) {
            BigRational acc;
            for (const auto& [r, wr] : recip_binomial_weights(k))
                acc += wr / BigRational(BigInt(static_cast<unsigned long>(n + static_cast<std::uint64_t>(r))));
            REQUIRE(acc * BigRational(binomial(static_cast<std::int64_t>(n) + k, k)) == BigRational(1));
        }
}

TEST_CASE("building blocks") {
    for (int s = 1; s <= 4; ++s) CHECK(gap(lemma1(s, 1), zeta(s + 1)) <= 1e-10);
    CHECK(gap(lemma1(2, 2), zeta(3) + zeta(2) - Approx::exact(BigRational(1))) < 1e-25);
    CHECK(gap(S_boundary(1, 1), "0.2402265069591007123335512631633324858653") <= 1e-8);
    CHECK(gap(quadratic_base(1, 1, 1), "3.606170709478782856199214484534349972295") <= 1e-8);
    CHECK(gap(S_closed(1, 2, 1, false), zeta(3) * BigRational(2) - zeta(2)) < 1e-25);
    // pi^2/12 - log^2 2 (not log^2(2)/2)
    CHECK(gap(S_closed(1, 1, 1, true), "0.3420140195059117935691050569963476228789") < 1e-25);
    CHECK(gap(S_closed(0, 3, 1, false), zeta(2) - Approx::exact(BigRational(1))) < 1e-25);
    CHECK_THROWS_AS(S_closed(0, 1, 1, false), DomainError);
    CHECK_THROWS_AS(S_closed(1, 0, 1, false), DomainError);
    CHECK_THROWS_AS(S_closed(1, 1, 0, false), DomainError);
}

TEST_CASE("theorem values") {
    CHECK(gap(theorem_value(SumSpec::linear(1, 1, 2, 1, false)), "0.7591797394709621343270611563") < 1e-25);
    CHECK(gap(theorem_value(SumSpec::linear(2, 2, 3, 2, false)), "0.405085116106896801969130055192") < 1e-25);
    CHECK(gap(theorem_value(SumSpec::linear(2, 2, 3, 2, true)), "0.296221041169493111692887558541") < 1e-25);
    CHECK(gap(theorem_value(SumSpec::linear(1, 2, 3, 2, true)), "0.292769232582941070635648501615") < 1e-25);
    CHECK(gap(theorem_value(SumSpec::quadratic(1, 1, 1, 1, 1, 1, false)), "3.606170709478782856199214484534349972295") <
          1e-25);
    CHECK_THROWS_AS(theorem_value(SumSpec::linear(1, 3, 2, 1, false)), DomainError);
}
