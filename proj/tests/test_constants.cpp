#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhsum/constants.hpp"
#include "near.hpp"

using namespace hhsum;
using testing_util::gap;

TEST_CASE("zeta values") {
    CHECK(gap(zeta(2), "1.644934066848226436472415166646025189219") < 1e-28);
    CHECK(gap(zeta(3), "1.202056903159594285399738161511449990765") < 1e-28);
    CHECK(gap(zeta(5), "1.036927755143369926331365486457034168057") < 1e-28);
    for (int s = 2; s <= 10; ++s) CHECK(gap(zeta(s), zeta_euler_maclaurin(s)) < 1e-28);
    CHECK(zeta(3).err < 1e-30);
    CHECK_THROWS(zeta(1));
}

TEST_CASE("alternating zeta") {
    CHECK(gap(zeta_alt(1), "0.6931471805599453094172321214581765680755") < 1e-28);
    CHECK(gap(zeta_alt(2), "0.8224670334241132182362075833230125946095") < 1e-28);
    for (int s = 1; s <= 8; ++s) CHECK(gap(zeta_alt(s), zeta_alt_direct(s)) < 1e-28);
}

TEST_CASE("polylogarithms, Catalan and inverse tangent integral") {
    CHECK(gap(catalan(), "0.9159655941772190150546035149323841107741") < 1e-28);
    CHECK(gap(polylog(4, Real("0.5")), "0.5174790616738993863307581618988629456224") < 1e-28);
    CHECK(gap(polylog(2, Real("-0.25")), "-0.2359002976862634538212") < 1e-20);
    CHECK(gap(polylog(2, Real(1)), zeta(2)) < 1e-28);
    CHECK(gap(polylog(3, Real(-1)), -zeta_alt(3)) < 1e-28);
    CHECK(gap(polylog(2, Real("0.75")), "0.978469392930306103743066666525") < 1e-28);
    CHECK(gap(ti2(Real("0.5")), "0.4872223582945223571") < 1e-18);
    CHECK(gap(ti2(Real(1)), catalan()) < 1e-28);
    CHECK(gap(detail::euler_gamma(), "0.5772156649015328606065120900824024310422") < 1e-28);
    CHECK(gap(pi_approx(), "3.141592653589793238462643383279502884197") < 1e-30);
}
