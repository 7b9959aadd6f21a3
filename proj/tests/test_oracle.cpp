#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhsum/closed_forms.hpp"
#include "hhsum/constants.hpp"
#include "hhsum/errors.hpp"
#include "hhsum/oracle.hpp"
#include "hhsum/sequences.hpp"
#include "near.hpp"

using namespace hhsum;
using testing_util::gap;

TEST_CASE("summand terms are exact") {
    const Summand t = Summand::from_spec(SumSpec::linear(1, 2, 3, 2, false));
    // h_1^(1,2) / (1^3 C(3,2)) = 1/3
    CHECK(t.exact_term(1) == BigRational(BigInt(1), BigInt(3)));
    CHECK(t.exact_term(2) == hyperharmonic(2, 1, 2) / BigRational(8 * 6));
    CHECK(t.exact_partial_sum(2) == t.exact_term(1) + t.exact_term(2));
}

TEST_CASE("convergence checks") {
    Summand t;
    t.factors = {{1, 1}};
    t.m = 1;
    CHECK_THROWS_AS(t.check_convergent(), DivergenceError);
    t.alternating = true;
    CHECK_NOTHROW(t.check_convergent());
    t.m = 0;
    CHECK_THROWS_AS(t.check_convergent(), DivergenceError);
}

TEST_CASE("positive series reach high accuracy") {
    Summand t;
    t.factors = {{1, 1}};
    t.m = 2;
    OracleOptions o;
    o.tol = 1e-25;
    const OracleResult r = oracle_sum(t, o);
    CHECK(r.converged);
    CHECK(r.monotone);
    CHECK(gap(r.value, zeta(3) * BigRational(2)) <= r.value.err + 1e-40);
    CHECK(r.value.err <= 1e-25);
}

TEST_CASE("error bounds are honest at coarse levels") {
    Summand t = Summand::from_spec(SumSpec::linear(2, 2, 3, 2, false));
    const Approx exact = theorem_value(SumSpec::linear(2, 2, 3, 2, false));
    for (std::int64_t budget : {512, 2048, 8192}) {
        OracleOptions o;
        o.tol = 1e-40;
        o.max_terms = budget;
        const OracleResult r = oracle_sum(t, o);
        CHECK_FALSE(r.converged);
        CHECK(gap(r.value, exact) <= r.value.err + exact.err);
    }
}

TEST_CASE("alternating series") {
    Summand t;
    t.factors = {{1, 1}};
    t.m = 2;
    t.alternating = true;
    OracleOptions o;
    o.tol = 1e-25;
    const OracleResult r = oracle_sum(t, o);
    CHECK(r.converged);
    CHECK(r.bracketed);
    CHECK(gap(r.value, "0.7512855644747464283748363509446562442281") < 1e-25);
    CHECK(gap(oracle_series(SumSpec::linear(1, 2, 3, 2, true), 1e-20), "0.292769232582941070635648501615") < 1e-20);
}
