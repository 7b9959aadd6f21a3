#pragma once

// Extended-precision reals and the value-with-error type every numeric
// evaluation returns.

#include <cstdint>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "hhsum/exact.hpp"

namespace hhsum {

using Real = boost::multiprecision::mpfr_float;

/// Working precision in decimal digits for newly created Reals.
void set_working_digits(unsigned digits10);
unsigned working_digits();
/// 10^{-working_digits}, as a double (clamped to the double range).
double working_epsilon();

Real to_real(const BigRational& q);
Real to_real(const BigInt& z);
Real pi_real();
Real log2_real();

/// Decimal rendering with `digits` significant digits.
std::string format_real(const Real& x, unsigned digits);

/// A value together with a claimed absolute error bound.
struct Approx {
    Real value{0};
    double err = 0.0;  // >= 0, finite
    std::int64_t terms = 0;

    Approx() = default;
    Approx(Real v, double e, std::int64_t n = 0);
    /// Exact value; err is the rounding floor of the conversion.
    static Approx exact(const BigRational& q);
    static Approx exact(const Real& v);

    double to_double() const { return value.convert_to<double>(); }
    /// |value - other| <= err + other.err + slack
    bool agrees_with(const Approx& other, double slack = 0.0) const;

    Approx& operator+=(const Approx& rhs);
    Approx& operator-=(const Approx& rhs);
    Approx& operator*=(const Approx& rhs);
    Approx& operator*=(const BigRational& c);

    friend Approx operator+(Approx a, const Approx& b) { return a += b; }
    friend Approx operator-(Approx a, const Approx& b) { return a -= b; }
    friend Approx operator*(Approx a, const Approx& b) { return a *= b; }
    friend Approx operator*(Approx a, const BigRational& c) { return a *= c; }
    friend Approx operator*(const BigRational& c, Approx a) { return a *= c; }
    friend Approx operator-(Approx a);
};

/// Absolute value of a Real as a double, saturating.
double abs_double(const Real& x);

}  // namespace hhsum
