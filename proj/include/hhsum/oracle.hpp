#pragma once

// Brute-force evaluation of the defining series, independent of the closed
// forms: exact head terms, extended-precision running sums, then a tail
// model (midpoint Euler-Maclaurin on the analytic continuation for positive
// series, CVZ acceleration for alternating ones).

#include <cstdint>
#include <string>
#include <vector>

#include "hhsum/closed_forms.hpp"
#include "hhsum/exact.hpp"
#include "hhsum/real.hpp"

namespace hhsum {

/// H_n^(p,s); p <= 0 (power sums) only with s = 1.
struct HarmonicFactor {
    int p = 1;
    int s = 1;
};

/// scale * prod_i H_n^(p_i,s_i) / (n^m prod_r (n + r)), optionally times (-1)^{n+1}.
struct Summand {
    std::vector<HarmonicFactor> factors;
    int m = 0;
    std::vector<int> shifts;
    BigRational scale{1};
    bool alternating = false;

    static Summand from_spec(const SumSpec& spec);

    /// Unsigned term at n >= 1, exactly.
    BigRational exact_term(std::uint64_t n) const;
    /// Signed partial sum of the first n terms, exactly.
    BigRational exact_partial_sum(std::uint64_t n) const;
    /// Throws DivergenceError when the series cannot converge.
    void check_convergent() const;
    std::string describe() const;
};

struct OracleOptions {
    double tol = 1e-8;
    std::int64_t max_terms = 0;  // 0: config().oracle_max_terms
    std::int64_t head = 0;       // 0: config().oracle_head
    int depth = 0;               // alternating: CVZ depth, 0 = default
};

struct OracleResult {
    Approx value;
    bool converged = true;      // err <= tol reached within max_terms
    bool bracketed = true;      // alternating: value between consecutive raw partial sums
    bool monotone = true;       // positive: partial sums increasing and below value
    std::int64_t terms = 0;
    Real last_partial{0};
};

OracleResult oracle_sum(const Summand& summand, const OracleOptions& opts = {});

/// Defining series of a theorem spec. Best effort when max_terms runs out:
/// err then reflects the bound actually reached.
Approx oracle_series(const SumSpec& spec, double tol, std::int64_t max_terms = 0);

}  // namespace hhsum
