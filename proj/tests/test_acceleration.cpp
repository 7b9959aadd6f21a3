#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhsum/acceleration.hpp"
#include "hhsum/config.hpp"
#include "hhsum/quadrature.hpp"
#include "hhsum/sequences.hpp"
#include "near.hpp"

using namespace hhsum;
using testing_util::gap;

TEST_CASE("alternating acceleration") {
    config();
    // sum (-1)^{n} / (n+1) = log 2
    const Approx l2 = cvz_sum([](std::int64_t n) { return Real(1) / (n + 1); });
    CHECK(gap(l2, "0.6931471805599453094172321214581765680755") < 1e-30);
    CHECK(l2.err < 1e-30);
    // sum (-1)^n/(2n+1) = pi/4
    std::vector<Real> a;
    for (int n = 0; n < 2 * cvz_default_depth(); ++n) a.push_back(Real(1) / (2 * n + 1));
    CHECK(gap(cvz_sum(a), "0.7853981633974483096156608458198757210493") < 1e-30);
    CHECK(cvz_default_depth() >= 60);
}

TEST_CASE("harmonic continuation matches exact harmonic numbers") {
    config();
    for (int q = 1; q <= 4; ++q) {
        const std::int64_t anchor = 100;
        const HarmonicContinuation h(q, anchor, to_real(harmonic(anchor, q)));
        for (std::uint64_t n : {150u, 400u, 1000u})
            CHECK(abs_double(h(Real(static_cast<unsigned>(n))) - to_real(harmonic(n, q))) < 1e-30);
    }
    const HarmonicContinuation cube(-3, 10, to_real(harmonic(10, -3)));
    CHECK(abs_double(cube(Real(20)) - to_real(harmonic(20, -3))) < 1e-35);
    // H_x - log x - gamma ~ 1/(2x)
    CHECK(abs_double(harmonic_asymptotic(1, Real(1000)) - to_real(harmonic(1000, 1))) > 0.5);
}

TEST_CASE("log-power series tails") {
    config();
    // sum_{n > N} 1/n^2 from the series x^{-2}
    LogPowerSeries g;
    g.add(2, 0, Real(1));
    const std::int64_t N = 50;
    const Approx tail = g.tail_after(N, 12);
    Real direct = 0;
    const Real z2("1.644934066848226436472415166646025189219");
    direct = z2 - to_real(harmonic(static_cast<std::uint64_t>(N), 2));
    CHECK(abs_double(tail.value - direct) < 1e-30);
    CHECK(g.derivative().eval(Real(2)) == Real(-0.25));
    CHECK(g.min_exponent() == 2);
}

TEST_CASE("finite-difference weights") {
    config();
    std::vector<Real> xs;
    for (int i = -4; i <= 4; ++i) xs.push_back(Real(10 + i));
    const auto w = fornberg_weights(Real(10), xs, 3);
    Real d1 = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) d1 += w[1][i] * xs[i] * xs[i] * xs[i];
    CHECK(abs_double(d1 - 300) < 1e-35);
}

TEST_CASE("tanh-sinh quadrature") {
    config();
    const Integrand log_x = [](const Real&, const Real& from0, const Real&) { return Real(log(from0)); };
    const Approx r = tanh_sinh(log_x, Real(0), Real(1), 1e-30);
    CHECK(abs_double(r.value + 1) < 1e-30);
    const Integrand inv_sqrt = [](const Real&, const Real& from0, const Real&) { return Real(1 / sqrt(from0)); };
    const Approx s = tanh_sinh(inv_sqrt, Real(0), Real(1), 1e-25);
    CHECK(abs_double(s.value - 2) <= s.err);
    CHECK(abs_double(s.value - 2) < 1e-20);
    CHECK_THROWS(tanh_sinh(log_x, Real(1), Real(0), 1e-10));
}
