#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhsum/config.hpp"
#include "hhsum/constants.hpp"
#include "hhsum/euler_sums.hpp"
#include "near.hpp"

using namespace hhsum;
using testing_util::gap;

TEST_CASE("classical evaluations") {
    const Approx z3 = zeta(3);
    CHECK(gap(linear_euler(1, 2, Sign::Plus, Sign::Plus), z3 * BigRational(2)) < 1e-25);
    CHECK(gap(linear_euler(1, 2, Sign::Plus, Sign::Minus), "0.7512855644747464283748363509446562442281") < 1e-25);
    CHECK(gap(linear_euler(1, 2, Sign::Minus, Sign::Plus), "1.40975789017438056486193524811") < 1e-25);
    CHECK(gap(linear_euler(1, 1, Sign::Minus, Sign::Minus), "1.062693540383213930569758846486345080475") < 1e-25);
    CHECK(gap(quadratic_euler(1, 1, 2, Sign::Plus), "4.599873743272337313943015710299963586793") < 1e-25);
    // S_{2,2} = 7/4 zeta(4)
    CHECK(gap(linear_euler(2, 2, Sign::Plus, Sign::Plus), zeta(4) * BigRational(BigInt(7), BigInt(4))) < 1e-25);
}

TEST_CASE("reduction identity") {
    for (int m = 2; m <= 6; ++m) {
        const auto [lhs, rhs] = euler_reduction_check(m);
        CHECK(gap(lhs, rhs) <= 1e-8);
        CHECK(gap(lhs, rhs) <= lhs.err + rhs.err + 1e-25);
    }
    CHECK_THROWS(euler_reduction_check(1));
}

TEST_CASE("tail bounds hold at small truncation") {
    const Approx exact = zeta(3) * BigRational(2);
    for (std::int64_t N : {50, 200, 800}) {
        const Approx a = linear_euler_at(1, 2, N);
        CHECK(gap(a, exact) <= a.err + exact.err);
        CHECK(a.err < 1e-10);
    }
    const Approx q = quadratic_euler_at(1, 1, 2, 100);
    CHECK(gap(q, "4.599873743272337313943015710299963586793") <= q.err + 1e-30);
}

TEST_CASE("divergent parameters are rejected") {
    CHECK_THROWS(linear_euler(1, 1, Sign::Plus, Sign::Plus));
    CHECK_NOTHROW(linear_euler(1, 1, Sign::Plus, Sign::Minus));
}
