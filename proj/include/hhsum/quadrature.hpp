#pragma once

// Tanh-sinh quadrature on a finite interval.

#include <functional>

#include "hhsum/real.hpp"

namespace hhsum {

/// f(x, x - a, b - x). The two distances are exact even when x rounds to an
/// endpoint, so integrands with removable points there can use them.
using Integrand = std::function<Real(const Real& x, const Real& from_a, const Real& from_b)>;

/// Integral of f over [a, b]. Halves the step until two successive levels
/// agree to `tol` (absolute) or max_level is reached; err is the last
/// difference plus rounding, so it stays honest when tol is not met.
Approx tanh_sinh(const Integrand& f, const Real& a, const Real& b, double tol, int max_level = 10);

}  // namespace hhsum
