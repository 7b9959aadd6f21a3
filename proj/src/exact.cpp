#include "hhsum/exact.hpp"

#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>

namespace hhsum {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational BigRational::from_mpq(const mpq_class& q) {
    BigRational r;
    r.q_ = q;
    r.q_.canonicalize();
    return r;
}

BigRational BigRational::abs() const {
    BigRational r;
    r.q_ = ::abs(q_);
    return r;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    BigRational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

BigRational BigRational::pow(unsigned exponent) const {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    BigRational r;
    r.q_ = mpq_class(num, den);  // already coprime
    return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    q_ += rhs.q_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= rhs.q_;
    return *this;
}

BigRational operator-(const BigRational& a) {
    BigRational r;
    r.q_ = -a.q_;
    return r;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigRational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational pochhammer(const BigRational& t, unsigned n) {
    BigRational r(1);
    BigRational x = t;
    for (unsigned i = 0; i < n; ++i) {
        r *= x;
        x += 1;
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace {

struct BernoulliTable {
    std::shared_mutex mutex;
    std::vector<BigRational> values;
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

}  // namespace

BigRational bernoulli_plus(unsigned n) {
    auto& table = bernoulli_table();
    {
        std::shared_lock lock(table.mutex);
        if (n < table.values.size()) return table.values[n];
    }
    std::unique_lock lock(table.mutex);
    auto& b = table.values;
    // sum_{j=0}^{k} C(k+1,j) B_j = k+1  =>  B_k = (k+1 - sum_{j<k} C(k+1,j) B_j) / (k+1)
    for (unsigned k = static_cast<unsigned>(b.size()); k <= n; ++k) {
        if (k >= 3 && k % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        BigRational acc(static_cast<long>(k) + 1);
        for (unsigned j = 0; j < k; ++j) {
            if (b[j].is_zero()) continue;
            acc -= BigRational(binomial(k + 1, j)) * b[j];
        }
        b.push_back(acc / BigRational(static_cast<long>(k) + 1));
    }
    return b[n];
}

std::vector<BigRational> faulhaber_coeffs(unsigned k) {
    std::vector<BigRational> c;
    c.reserve(k + 1);
    const BigRational inv(BigInt(1), BigInt(k + 1));
    for (unsigned j = 0; j <= k; ++j) c.push_back(BigRational(binomial(k + 1, j)) * bernoulli_plus(j) * inv);
    return c;
}

BigRational faulhaber_sum(std::uint64_t n, unsigned k) {
    const auto c = faulhaber_coeffs(k);
    // Horner in n over powers n^{k+1}, n^k, ..., n^1.
    const BigRational x{BigInt(static_cast<unsigned long>(n))};
    BigRational acc;
    for (unsigned j = 0; j <= k; ++j) acc = (acc + c[j]) * x;
    return acc;
}

}  // namespace hhsum
