#include "hhsum/real.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace hhsum {

namespace {
std::atomic<unsigned> g_digits{50};
[[maybe_unused]] const bool g_precision_set = (Real::default_precision(50), true);
}

void set_working_digits(unsigned digits10) {
    if (digits10 < 15) throw std::domain_error("working precision must be at least 15 digits");
    g_digits = digits10;
    Real::default_precision(digits10);
}

unsigned working_digits() { return g_digits; }

double working_epsilon() {
    const double e = std::pow(10.0, -static_cast<double>(g_digits.load()));
    return std::max(e, std::numeric_limits<double>::min());
}

Real to_real(const BigRational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const BigInt& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real pi_real() { return boost::math::constants::pi<Real>(); }

Real log2_real() { return boost::math::constants::ln_two<Real>(); }

std::string format_real(const Real& x, unsigned digits) {
    std::ostringstream os;
    os.precision(static_cast<std::streamsize>(digits));
    os << x;
    return os.str();
}

double abs_double(const Real& x) {
    const double d = boost::multiprecision::abs(x).convert_to<double>();
    if (!std::isfinite(d)) return std::numeric_limits<double>::max();
    return d;
}

Approx::Approx(Real v, double e, std::int64_t n) : value(std::move(v)), err(e), terms(n) {
    if (!(err >= 0.0) || !std::isfinite(err)) throw std::domain_error("Approx: error bound must be finite and >= 0");
}

Approx Approx::exact(const BigRational& q) {
    Real v = to_real(q);
    const double e = abs_double(v) * working_epsilon();
    return Approx(std::move(v), e);
}

Approx Approx::exact(const Real& v) { return Approx(v, abs_double(v) * working_epsilon()); }

bool Approx::agrees_with(const Approx& other, double slack) const {
    return abs_double(value - other.value) <= err + other.err + slack;
}

Approx& Approx::operator+=(const Approx& rhs) {
    value += rhs.value;
    err += rhs.err;
    terms = std::max(terms, rhs.terms);
    return *this;
}

Approx& Approx::operator-=(const Approx& rhs) {
    value -= rhs.value;
    err += rhs.err;
    terms = std::max(terms, rhs.terms);
    return *this;
}

Approx& Approx::operator*=(const Approx& rhs) {
    const double a = abs_double(value);
    const double b = abs_double(rhs.value);
    err = a * rhs.err + b * err + err * rhs.err;
    value *= rhs.value;
    terms = std::max(terms, rhs.terms);
    return *this;
}

Approx& Approx::operator*=(const BigRational& c) {
    value *= to_real(c);
    err *= std::fabs(c.to_double());
    return *this;
}

Approx operator-(Approx a) {
    a.value = -a.value;
    return a;
}

}  // namespace hhsum
