#pragma once

// Series acceleration and tail models shared by the constants, Euler-sum
// and oracle code.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hhsum/real.hpp"

namespace hhsum {

/// Cohen-Villegas-Zagier depth for the current working precision.
int cvz_default_depth();

/// sum_{k>=0} (-1)^k a[k] by CVZ. Uses a[0..2D-1] with D = a.size()/2 and
/// reports the V(D) vs V(2D) difference (plus rounding) as err.
Approx cvz_sum(const std::vector<Real>& a);
/// Same, generating a(k) for k = 0 .. 2*depth-1.
Approx cvz_sum(const std::function<Real(std::int64_t)>& a, int depth = 0);
/// Plain CVZ value with exactly n terms.
Real cvz_value(const std::vector<Real>& a, std::size_t n);

/// Asymptotic part A_q(x) of H_x^(q), q >= 1, without the constant
/// (gamma for q = 1, zeta(q) otherwise). Terms are added until they fall
/// below the working precision relative to x^{-q}.
Real harmonic_asymptotic(int q, const Real& x);

/// Analytic continuation of H_x^(q) in real x >= anchor, pinned to the exact
/// value at the integer anchor. For q <= 0 this is the Faulhaber polynomial.
class HarmonicContinuation {
public:
    HarmonicContinuation(int q, std::int64_t anchor, const Real& value_at_anchor);
    Real operator()(const Real& x) const;
    int order() const { return q_; }

private:
    int q_;
    Real shift_;  // H_N - A_q(N)
    std::vector<Real> poly_;  // q <= 0: Faulhaber coefficients, highest power first
};

/// Finite sum of c * x^{-e} * log^j(x), keyed by (e, j).
class LogPowerSeries {
public:
    using Key = std::pair<int, int>;

    void add(int e, int j, const Real& c);
    LogPowerSeries& operator+=(const LogPowerSeries& rhs);
    LogPowerSeries times(const LogPowerSeries& rhs, int max_exponent) const;
    LogPowerSeries scaled(const Real& c) const;
    /// Multiplies by x^{-e}.
    LogPowerSeries shifted(int e) const;
    LogPowerSeries derivative() const;

    Real eval(const Real& x) const;
    /// Integral from N to infinity; every term needs e > 1.
    Real integral_from(const Real& N) const;
    /// sum_{n > N} g(n) by Euler-Maclaurin at N with `order` Bernoulli terms.
    /// err combines the last correction included and rounding.
    Approx tail_after(std::int64_t N, int order) const;

    const std::map<Key, Real>& terms() const { return terms_; }
    int min_exponent() const;

private:
    std::map<Key, Real> terms_;
};

/// Asymptotic series for H_x^(q) - K (the constant omitted), q >= 1,
/// truncated at exponent <= max_exponent.
LogPowerSeries harmonic_asymptotic_series(int q, int max_exponent);

/// Fornberg weights: derivative orders 0..max_order at x0 from samples at xs.
std::vector<std::vector<Real>> fornberg_weights(const Real& x0, const std::vector<Real>& xs, int max_order);

}  // namespace hhsum
