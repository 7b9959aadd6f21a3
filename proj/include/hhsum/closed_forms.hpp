#pragma once

// Closed-form evaluation of reciprocal-binomial hyperharmonic sums
//   sum_n w(n) H_n^(p,s) / (n^m C(n+k,k))
//   sum_n w(n) H_n^(p1,s1) H_n^(p2,s2) / (n^m C(n+k,k))
// with w(n) = 1 or (-1)^{n+1}, reduced to Euler sums, zeta values and
// harmonic numbers. Every building block is exposed for spot checks.

#include <string>
#include <utility>
#include <vector>

#include "hhsum/exact.hpp"
#include "hhsum/real.hpp"

namespace hhsum {

struct SumSpec {
    enum class Kind { Linear, Quadratic };

    Kind kind = Kind::Linear;
    bool alternating = false;
    int p = 1;
    int s = 1;
    int p2 = 1;  // quadratic only
    int s2 = 1;  // quadratic only
    int m = 1;
    int k = 1;

    static SumSpec linear(int p, int s, int m, int k, bool alt);
    static SumSpec quadratic(int p1, int s1, int p2, int s2, int m, int k, bool alt);

    /// Throws DomainError naming the violated condition.
    void validate() const;
    /// Short stable identifier, e.g. "lin+:p=2,s=2,m=3,k=2".
    std::string id() const;
    std::string params() const;
};

/// 1/C(n+k,k) = sum_r w_r/(n+r), w_r = (-1)^{r+1} r C(k,r), r = 1..k.
std::vector<std::pair<int, BigRational>> recip_binomial_weights(int k);

/// sum_n a H_n^(s) / (n(n+a)), s, a >= 1.
Approx lemma1(int s, int a);

/// S(p,m,r) = sum_n w(n) H_n^(p) / (n^m (n+r)) with w as above.
/// p <= 0 means the power sum 1^{-p} + ... + n^{-p}.
/// Requirements: r >= 1; p >= 1: m >= 1 (m >= 0 when alternating);
/// p <= 0: m >= 2-p (m >= 1-p when alternating).
Approx S_closed(int p, int m, int r, bool alt);

/// sum_n (-1)^{n+1} H_n^(p) / (n+r), p, r >= 1.
Approx S_boundary(int p, int r);

/// sum_n r H_n^(p1) H_n^(p2) / (n(n+r)), p1, p2, r >= 1.
Approx quadratic_base(int p1, int p2, int r);

/// T(p1,p2,m,r) = sum_n w(n) H_n^(p1) H_n^(p2) / (n^m (n+r)).
/// Requirements: both orders >= 1: m >= 1 (m >= 0 alternating);
/// one order q <= 0: m >= 2-q (1-q); both <= 0: m >= 3-p1-p2 (2-p1-p2).
Approx T_closed(int p1, int p2, int m, int r, bool alt);

/// sum_n (-1)^{n+1} H_n^(p1) H_n^(p2) / (n+r), p1, p2, r >= 1.
Approx T_boundary(int p1, int p2, int r);

Approx theorem_linear(const SumSpec& spec);
Approx theorem_quadratic(const SumSpec& spec);
/// Dispatches on spec.kind.
Approx theorem_value(const SumSpec& spec);

}  // namespace hhsum
