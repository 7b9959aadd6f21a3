#include "hhsum/quadrature.hpp"

#include <cmath>

#include "hhsum/config.hpp"
#include "hhsum/errors.hpp"

namespace hhsum {

using boost::multiprecision::abs;
using boost::multiprecision::asinh;
using boost::multiprecision::cosh;
using boost::multiprecision::exp;
using boost::multiprecision::isfinite;
using boost::multiprecision::sinh;

Approx tanh_sinh(const Integrand& f, const Real& a, const Real& b, double tol, int max_level) {
    config();
    if (!(b > a)) throw DomainError("tanh_sinh requires a < b");
    const Real half = (b - a) / 2;
    const Real halfpi = pi_real() / 2;
    // Beyond t_max the endpoint distance is below 10^{-2 digits} of the interval.
    const Real t_max = asinh(Real(2.0 * working_digits() * std::log(10.0)) / pi_real()) + Real(0.5);

    double fmax = 0.0;
    std::int64_t evals = 0;
    auto node = [&](const Real& t) -> Real {
        const Real u = halfpi * sinh(t);
        const Real e2 = exp(2 * u);
        const Real from_b = 2 * half / (1 + e2);
        const Real from_a = 2 * half * e2 / (1 + e2);
        const Real x = a + from_a;
        const Real ch = cosh(u);
        const Real w = half * halfpi * cosh(t) / (ch * ch);
        if (from_a == 0 || from_b == 0) return Real(0);
        const Real v = f(x, from_a, from_b);
        ++evals;
        if (!isfinite(v)) throw DomainError("tanh_sinh: integrand is not finite at an interior node");
        fmax = std::max(fmax, abs_double(v * w));
        return v * w;
    };

    Real h = 1;
    Real sum = node(Real(0));
    for (Real t = h; t <= t_max; t += h) sum += node(t) + node(-t);
    Real estimate = h * sum;
    double diff = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        for (Real t = h; t <= t_max; t += 2 * h) sum += node(t) + node(-t);
        const Real next = h * sum;
        diff = abs_double(next - estimate);
        estimate = next;
        if (level >= 3 && diff <= tol * 1e-3) break;
    }
    const double rounding = 10.0 * static_cast<double>(evals) * fmax * working_epsilon();
    return Approx(std::move(estimate), diff + rounding, evals);
}

}  // namespace hhsum
