#pragma once

// zeta, alternating zeta, polylogarithms, the inverse tangent integral and
// Catalan's constant, each with an error bound. Values are cached per
// configuration.

#include "hhsum/real.hpp"

namespace hhsum {

/// zeta(s), s >= 2. Even s from the Bernoulli closed form, odd s from the
/// accelerated alternating series. s <= 1 throws DivergenceError.
Approx zeta(int s);

/// zeta(s) by Euler-Maclaurin; an independent path used for cross-checks.
Approx zeta_euler_maclaurin(int s);

/// Alternating zeta: (1 - 2^{1-s}) zeta(s), log 2 at s = 1. s <= 0 throws.
Approx zeta_alt(int s);

/// Alternating zeta summed directly by acceleration (cross-check path).
Approx zeta_alt_direct(int s);

/// Li_p(x) for p >= 1, |x| <= 1, (p, x) != (1, 1).
Approx polylog(int p, const Real& x);

/// Inverse tangent integral Ti_2(x) for 0 <= x <= 1.
Approx ti2(const Real& x);

/// Catalan's constant.
Approx catalan();

Approx pi_approx();
Approx log2_approx();

namespace detail {
/// Euler's constant from H_N - A_1(N); used internally by tail models.
Approx euler_gamma();
}  // namespace detail

}  // namespace hhsum
