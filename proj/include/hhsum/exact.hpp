#pragma once

// Exact integer/rational arithmetic and the Bernoulli-Faulhaber machinery.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hhsum {

using BigInt = mpz_class;

/// Exact rational in canonical form: denominator > 0, gcd(|num|, den) = 1.
/// Every constructor and arithmetic result is reduced.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}
    BigRational(int value) : q_(static_cast<long>(value)) {}
    BigRational(const BigInt& value) : q_(value) {}
    /// Throws std::domain_error on a zero denominator.
    BigRational(const BigInt& num, const BigInt& den);

    static BigRational from_mpq(const mpq_class& q);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    BigRational abs() const;
    /// Throws std::domain_error when zero.
    BigRational inverse() const;
    BigRational pow(unsigned exponent) const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a);

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

    /// "p/q", or "p" when integral.
    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Rising factorial t(t+1)...(t+n-1); empty product is 1.
BigRational pochhammer(const BigRational& t, unsigned n);

BigInt factorial(unsigned n);

/// B_n^+ (generating function t/(1-e^{-t}), so B_1^+ = +1/2).
/// Memoized; the table grows on demand and is safe to call concurrently.
BigRational bernoulli_plus(unsigned n);

/// Coefficients c_j = C(k+1,j) B_j^+ / (k+1), j = 0..k, with
/// sum_{l=1}^n l^k = sum_j c_j n^{k+1-j}.
std::vector<BigRational> faulhaber_coeffs(unsigned k);

/// sum_{l=1}^n l^k through the Bernoulli form.
BigRational faulhaber_sum(std::uint64_t n, unsigned k);

}  // namespace hhsum
