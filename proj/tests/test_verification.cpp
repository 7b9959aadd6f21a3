#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hhsum/config.hpp"
#include "hhsum/constants.hpp"
#include "hhsum/report_io.hpp"
#include "hhsum/sequences.hpp"
#include "hhsum/verification.hpp"
#include "near.hpp"

using namespace hhsum;
using testing_util::gap;

static int count(const std::vector<VerificationReport>& rs, Status s) {
    int n = 0;
    for (const auto& r : rs) n += r.status == s;
    return n;
}

static const VerificationReport& find(const std::vector<VerificationReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return r;
    FAIL("missing report " << id);
    return rs.front();
}

TEST_CASE("compare statuses") {
    const Approx a(Real(1), 0.0);
    const Approx b(Real("1.000000001"), 0.0);
    CHECK(compare("x", "", a, b, 1e-8).status == Status::Verified);
    CHECK(compare("x", "", a, b, 1e-10).status == Status::Discrepancy);
    CHECK(compare("x", "", a, b, 1e-10, true).status == Status::DiscrepancyExpected);
    CHECK(compare("x", "", a, Approx(Real(1), 1e-6), 1e-10).status == Status::Discrepancy);
    CHECK(skipped("x", "", "why").status_string() == "SKIPPED(why)");
}

TEST_CASE("verify a single spec") {
    const auto r = verify(SumSpec::linear(1, 1, 2, 1, false), 1e-8);
    CHECK(r.status == Status::Verified);
    CHECK(r.terms_used > 0);
    CHECK(verify(SumSpec::linear(1, 1, 2, 1, false), 1e-60).status == Status::Discrepancy);
    const auto s = verify(SumSpec::linear(1, 3, 2, 1, false), 1e-8);
    CHECK(s.status == Status::Skipped);
    CHECK(s.status_string().find("m >= s") != std::string::npos);
}

TEST_CASE("integral closed forms") {
    // int_0^1 log x = -1, int_0^1 x log^2 x = 1/4
    CHECK(gap(L_closed(0, 1, Real(1)), "-1") < 1e-40);
    CHECK(gap(L_closed(1, 2, Real(1)), "0.25") < 1e-40);
    for (std::uint64_t n = 0; n <= 10; ++n)
        CHECK(abs_double(M_closed(static_cast<int>(n), 1, Real(0)).value +
                         to_real(harmonic(n + 1, 1) / BigRational(BigInt(static_cast<unsigned long>(n + 1))))) < 1e-40);
    CHECK_THROWS(L_closed(0, 1, Real(0)));
    CHECK_THROWS(M_closed(0, 1, Real(1)));
}

TEST_CASE("binomial-sum identities") {
    for (std::uint64_t n = 0; n <= 60; ++n) {
        CHECK(prop2_harmonic(n) == harmonic(n + 1, 1));
        CHECK(prop2_harmonic_weighted(n) == harmonic(n + 1, 1));
        CHECK(prop3_h2(n) == harmonic(n + 1, 2));
        CHECK(prop3_h3(n) == harmonic(n + 1, 3));
    }
    for (int r = 1; r <= 5; ++r)
        for (std::uint64_t n = 0; n <= 20; ++n) CHECK(prop2_hyper(n, r) == hyperharmonic(n, 1, r));
    CHECK(prop3_h3_unshifted(1) != harmonic(2, 3));
}

TEST_CASE("integral catalog") {
    CHECK(integrand_catalog().size() == 15);
    CHECK(integrand_from_name("phi_over_sin") == IntegrandId::PhiOverSin);
    CHECK_THROWS(integrand_from_name("nope"));
    const Approx v = integrate(IntegrandId::PhiOverSin, Real(0), pi_real() / 2, 1e-20);
    CHECK(gap(v, catalan() * BigRational(2)) < 1e-20);
}

TEST_CASE("suites") {
    const auto integrals = section4_suite(1e-8);
    CHECK(count(integrals, Status::Discrepancy) == 0);
    CHECK(count(integrals, Status::DiscrepancyExpected) == 3);
    CHECK(find(integrals, "integral:trig_identity_1").status == Status::Verified);
    CHECK(gap(find(integrals, "integral:trig_identity_1").oracle, "0.087080360259124325939") < 1e-18);
    CHECK(gap(find(integrals, "integral:trig_identity_2").oracle, "0.662478893670686962357") < 1e-18);

    const auto examples = example_suite(1e-8);
    CHECK(count(examples, Status::Discrepancy) == 0);
    CHECK(find(examples, "ref_lin+_p2s2m3k2:reference-vs-oracle").status == Status::DiscrepancyExpected);
    CHECK(gap(find(examples, "ref_lin+_p2s2m3k2:reference-vs-oracle").closed, "-1.9206572253062086964229117847") < 1e-25);
    CHECK(find(examples, "ref_lin-_p2s2m3k2:reference-vs-oracle").status == Status::Verified);
    CHECK(find(examples, "ref_lin-_p1s2m3k2:reference-polylog-vs-oracle").status == Status::DiscrepancyExpected);
    CHECK(find(examples, "ref_lin-_p1s2m3k2:reference-euler-vs-reference-polylog").status == Status::Verified);

    const auto ids = identities_suite(40, 3);
    CHECK(count(ids, Status::Discrepancy) == 0);
    CHECK(find(ids, "binomial_sum:order3_unshifted").status == Status::DiscrepancyExpected);

    const auto coeffs = coeffs_suite(3, 30);
    CHECK(count(coeffs, Status::Verified) == static_cast<int>(coeffs.size()));
    CHECK(count(euler_suite(1e-8), Status::Discrepancy) == 0);
}

TEST_CASE("theorem grid enumeration") {
    const auto grid = theorem_grid(6, 4);
    CHECK(grid.size() == 2952);
    for (const auto& s : grid) CHECK_NOTHROW(s.validate());
}

TEST_CASE("report formats") {
    const auto r = verify(SumSpec::linear(1, 1, 2, 1, false), 1e-8);
    const auto j = report_to_json(r);
    for (const char* key : {"id", "params", "closed_value", "closed_err", "oracle_value", "oracle_err", "abs_diff",
                            "tolerance", "terms_used", "status"})
        CHECK(j.contains(key));
    CHECK(j.size() == 10);
    CHECK(j["status"] == "VERIFIED");
    CHECK(j["closed_value"].get<std::string>().rfind("0.759179739470962134327061156", 0) == 0);
    CHECK(csv_header() == "id,params,closed,oracle,diff,tol,status");
    const std::string row = report_to_csv(r);
    CHECK(row.rfind("\"lin+:p=1,s=1,m=2,k=1,alt=0\",\"p=1,s=1,m=2,k=1,alt=0\",", 0) == 0);
    std::ostringstream os;
    write_reports(os, {r, skipped("a", "b", "c")}, OutputFormat::Text);
    CHECK(os.str().find("2 checks: 1 verified, 0 discrepancy, 0 discrepancy-expected, 1 skipped") != std::string::npos);
}
