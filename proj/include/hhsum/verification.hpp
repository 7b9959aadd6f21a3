#pragma once

// Closed form vs independent oracle comparisons, exact identity checkers,
// the integral catalog and the named suites built from them.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hhsum/closed_forms.hpp"
#include "hhsum/exact.hpp"
#include "hhsum/quadrature.hpp"
#include "hhsum/real.hpp"

namespace hhsum {

enum class Status { Verified, Discrepancy, DiscrepancyExpected, Skipped };

struct VerificationReport {
    std::string id;
    std::string params;
    Approx closed;
    Approx oracle;
    double abs_diff = 0.0;
    double tolerance = 0.0;
    std::int64_t terms_used = 0;
    Status status = Status::Skipped;
    std::string reason;  // why SKIPPED, or what a DISCREPANCY-EXPECTED item documents

    /// "VERIFIED", "DISCREPANCY", "DISCREPANCY-EXPECTED" or "SKIPPED(reason)".
    std::string status_string() const;
};

/// VERIFIED iff |closed - oracle| <= tol + closed.err + oracle.err and the
/// combined error bound is itself within tol. A failing
/// comparison is DISCREPANCY-EXPECTED when `expected_discrepancy` is set.
VerificationReport compare(std::string id, std::string params, const Approx& closed, const Approx& oracle, double tol,
                           bool expected_discrepancy = false, std::string note = {});

/// Exact comparison; VERIFIED iff every checked pair was equal. `last_*` are
/// reported as the values, `max_diff` as abs_diff.
VerificationReport compare_exact(std::string id, std::string params, const BigRational& last_closed,
                                 const BigRational& last_oracle, const BigRational& max_diff, std::int64_t cases,
                                 bool expected_discrepancy = false, std::string note = {});

VerificationReport skipped(std::string id, std::string params, std::string reason);

/// Theorem machinery vs oracle for one spec. Domain errors become SKIPPED.
VerificationReport verify(const SumSpec& spec, double tol, std::int64_t max_terms = 0);

// Integrals of powers and logarithms.

/// int_0^x y^n log^m y dy, 0 < x <= 1.
Approx L_closed(int n, int m, const Real& x);
/// int_x^1 y^n log^m (1-y) dy, 0 <= x < 1.
Approx M_closed(int n, int m, const Real& x);

// Binomial-sum representations of harmonic numbers (exact).

/// sum_{j=0}^{n} C(n+1,j+1) (-1)^j/(j+1) = H_{n+1}
BigRational prop2_harmonic(std::uint64_t n);
/// (n+1) sum_{j=0}^{n} C(n,j) (-1)^j/(j+1)^2 = H_{n+1}
BigRational prop2_harmonic_weighted(std::uint64_t n);
/// C(n+r-1,r-1) (first sum - second sum) = h_n^(r)
BigRational prop2_hyper(std::uint64_t n, int r);
/// = H_{n+1}^(2)
BigRational prop3_h2(std::uint64_t n);
/// = H_{n+1}^(3), with 1/(j+2)^2 weighting the middle sum.
BigRational prop3_h3(std::uint64_t n);
/// The middle sum weighted by 1/(j+1)^2; not equal to H_{n+1}^(3).
BigRational prop3_h3_unshifted(std::uint64_t n);

// Integral catalog.

enum class IntegrandId {
    PhiSqOverSin,         // phi^2 / sin phi
    PhiOverSin,           // phi / sin phi
    LogSqOverXSqMinus1,   // log^2 x / (x^2 - 1)
    LogOverOnePlusSq,     // log y / (1 + y^2)
    LogSqOverOnePlusSq,   // log^2 y / (1 + y^2)
    RationalPhiCos,       // phi (2 cos phi - 1) / (5 - 4 cos phi)
    SinPhiCos,            // 2 phi sin phi / (5 - 4 cos phi)
    RationalPhiSin,       // phi (2 cos phi - 1) / (5 - 4 sin phi)
    SinPhiSin,            // 2 phi sin phi / (5 - 4 sin phi)
    LogOverTwoMinusX,     // log x / (2 - x)
    PiOverFourPlusSq,     // pi / (4 + y^2)
    YLogYOverFourPlusSq,  // y log y / (4 + y^2)
    HalfPiYOverFourPlusSq,  // (pi/2) y / (4 + y^2)
    TwoLogOverFourPlusSq,   // 2 log y / (4 + y^2)
    AtanOverY,            // arctan y / y
};

struct IntegrandInfo {
    IntegrandId id;
    const char* name;
    const char* formula;
    bool angular;  // natural interval [0, pi/2] instead of [0, 1]
};

const std::vector<IntegrandInfo>& integrand_catalog();
/// Throws DomainError for unknown names.
IntegrandId integrand_from_name(const std::string& name);
Integrand make_integrand(IntegrandId id, const Real& a, const Real& b);
Approx integrate(IntegrandId id, const Real& a, const Real& b, double tol);

// Suites. Reports come back in a fixed order.

std::vector<VerificationReport> section4_suite(double tol);
std::vector<VerificationReport> example_suite(double tol);
std::vector<VerificationReport> identities_suite(std::uint64_t n_max, int r_max);
std::vector<VerificationReport> coeffs_suite(int r_max, std::uint64_t n_max);
std::vector<VerificationReport> euler_suite(double tol);
std::vector<VerificationReport> lemma_suite(double tol);
/// Every theorem spec with orders <= 3, s <= 3, m <= m_max, k <= k_max, both signs.
std::vector<SumSpec> theorem_grid(int m_max = 6, int k_max = 4);
std::vector<VerificationReport> grid_suite(double tol, int m_max = 6, int k_max = 4,
                                           const std::function<void(std::size_t, std::size_t)>& progress = {});

}  // namespace hhsum
