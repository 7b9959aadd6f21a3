#include "hhsum/acceleration.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "hhsum/config.hpp"
#include "hhsum/errors.hpp"

namespace hhsum {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

int cvz_default_depth() {
    config();
    return static_cast<int>(std::ceil(1.31 * working_digits())) + 4;
}

Real cvz_value(const std::vector<Real>& a, std::size_t n) {
    if (n == 0) return Real(0);
    if (n > a.size()) throw DomainError("cvz_value: not enough terms");
    Real d = pow(Real(3) + sqrt(Real(8)), static_cast<long>(n));
    d = (d + 1 / d) / 2;
    Real b = -1;
    Real c = -d;
    Real s = 0;
    const long nn = static_cast<long>(n);
    for (long k = 0; k < nn; ++k) {
        c = b - c;
        s += c * a[static_cast<std::size_t>(k)];
        b = Real((k + nn) * (k - nn)) * b / ((Real(k) + Real(0.5)) * Real(k + 1));
    }
    return s / d;
}

Approx cvz_sum(const std::vector<Real>& a) {
    const std::size_t depth = a.size() / 2;
    if (depth == 0) throw DomainError("cvz_sum: need at least two terms");
    const Real coarse = cvz_value(a, depth);
    Real fine = cvz_value(a, 2 * depth);
    double scale = 0.0;
    for (std::size_t k = 0; k < 2 * depth; ++k) scale = std::max(scale, abs_double(a[k]));
    const double rounding = 10.0 * static_cast<double>(2 * depth) * scale * working_epsilon();
    return Approx(std::move(fine), abs_double(coarse - fine) + rounding, static_cast<std::int64_t>(2 * depth));
}

Approx cvz_sum(const std::function<Real(std::int64_t)>& a, int depth) {
    if (depth <= 0) depth = cvz_default_depth();
    std::vector<Real> terms;
    terms.reserve(static_cast<std::size_t>(2 * depth));
    for (std::int64_t k = 0; k < 2 * depth; ++k) terms.push_back(a(k));
    return cvz_sum(terms);
}

namespace {

// Coefficients of the Bernoulli part of A_q: term k (k >= 1) is
// -coef[k-1] * x^{-(q+2k-1)} (q >= 2) or -coef[k-1] * x^{-2k} (q = 1).
constexpr int kAsymptoticTerms = 60;

struct AsymCache {
    std::mutex mutex;
    std::uint64_t generation = 0;
    std::map<int, std::vector<Real>> coeffs;
};

AsymCache& asym_cache() {
    static AsymCache cache;
    return cache;
}

BigRational asym_coeff(int q, int k) {
    const BigRational b = bernoulli_plus(static_cast<unsigned>(2 * k));
    if (q == 1) return b / BigRational(2 * k);
    return b * pochhammer(BigRational(q), static_cast<unsigned>(2 * k - 1)) /
           BigRational(factorial(static_cast<unsigned>(2 * k)));
}

const std::vector<Real>& asym_coeffs(int q) {
    auto& cache = asym_cache();
    const auto gen = config_generation();
    std::lock_guard lock(cache.mutex);
    if (cache.generation != gen) {
        cache.coeffs.clear();
        cache.generation = gen;
    }
    auto it = cache.coeffs.find(q);
    if (it == cache.coeffs.end()) {
        std::vector<Real> v;
        for (int k = 1; k <= kAsymptoticTerms; ++k) v.push_back(to_real(asym_coeff(q, k)));
        it = cache.coeffs.emplace(q, std::move(v)).first;
    }
    return it->second;
}

}  // namespace

Real harmonic_asymptotic(int q, const Real& x) {
    if (q < 1) throw DomainError("harmonic_asymptotic requires q >= 1");
    const auto& coef = asym_coeffs(q);
    const Real inv = 1 / x;
    const Real inv2 = inv * inv;
    Real lead;
    Real power;  // x^{-(q+1)} for q >= 2, x^{-2} for q = 1
    if (q == 1) {
        lead = log(x) + inv / 2;
        power = inv2;
    } else {
        const Real xq = pow(inv, q);
        lead = -x * xq / (q - 1) + xq / 2;
        power = xq * inv;
    }
    const Real floor = abs(lead) * Real(working_epsilon()) * Real(1e-3);
    Real prev_abs = -1;
    for (int k = 0; k < kAsymptoticTerms; ++k) {
        const Real term = coef[static_cast<std::size_t>(k)] * power;
        const Real ta = abs(term);
        if (prev_abs >= 0 && ta > prev_abs) break;  // asymptotic series started to diverge
        lead -= term;
        if (ta < floor) break;
        prev_abs = ta;
        power *= inv2;
    }
    return lead;
}

HarmonicContinuation::HarmonicContinuation(int q, std::int64_t anchor, const Real& value_at_anchor) : q_(q) {
    if (q >= 1) {
        shift_ = value_at_anchor - harmonic_asymptotic(q, Real(anchor));
    } else {
        for (const auto& c : faulhaber_coeffs(static_cast<unsigned>(-q))) poly_.push_back(to_real(c));
    }
}

Real HarmonicContinuation::operator()(const Real& x) const {
    if (q_ >= 1) return shift_ + harmonic_asymptotic(q_, x);
    Real acc = 0;
    for (const auto& c : poly_) acc = (acc + c) * x;
    return acc;
}

void LogPowerSeries::add(int e, int j, const Real& c) {
    auto [it, inserted] = terms_.try_emplace({e, j}, c);
    if (!inserted) it->second += c;
}

LogPowerSeries& LogPowerSeries::operator+=(const LogPowerSeries& rhs) {
    for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, c);
    return *this;
}

LogPowerSeries LogPowerSeries::times(const LogPowerSeries& rhs, int max_exponent) const {
    LogPowerSeries out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : rhs.terms_) {
            const int e = k1.first + k2.first;
            if (e > max_exponent) continue;
            out.add(e, k1.second + k2.second, c1 * c2);
        }
    return out;
}

LogPowerSeries LogPowerSeries::scaled(const Real& c) const {
    LogPowerSeries out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

LogPowerSeries LogPowerSeries::shifted(int e) const {
    LogPowerSeries out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(Key{key.first + e, key.second}, v);
    return out;
}

LogPowerSeries LogPowerSeries::derivative() const {
    LogPowerSeries out;
    for (const auto& [key, c] : terms_) {
        const auto [e, j] = key;
        if (e != 0) out.add(e + 1, j, c * Real(-e));
        if (j > 0) out.add(e + 1, j - 1, c * Real(j));
    }
    return out;
}

int LogPowerSeries::min_exponent() const {
    int m = 1 << 30;
    for (const auto& [key, c] : terms_) m = std::min(m, key.first);
    return m;
}

Real LogPowerSeries::eval(const Real& x) const {
    const Real L = log(x);
    Real acc = 0;
    for (const auto& [key, c] : terms_) acc += c * pow(x, -key.first) * pow(L, key.second);
    return acc;
}

Real LogPowerSeries::integral_from(const Real& N) const {
    const Real L = log(N);
    Real acc = 0;
    for (const auto& [key, c] : terms_) {
        const auto [e, j] = key;
        if (e <= 1) throw DivergenceError("tail integral diverges: exponent must exceed 1");
        // N^{1-e} sum_{i<=j} (j!/i!) L^i / (e-1)^{j-i+1}
        Real inner = 0;
        Real fact_ratio = 1;  // j!/i! for i = j downwards
        for (int i = j; i >= 0; --i) {
            inner += fact_ratio * pow(L, i) / pow(Real(e - 1), j - i + 1);
            fact_ratio *= i;
        }
        acc += c * pow(N, 1 - e) * inner;
    }
    return acc;
}

Approx LogPowerSeries::tail_after(std::int64_t N, int order) const {
    const Real x(N);
    Real value = integral_from(x) - eval(x) / 2;
    LogPowerSeries d = derivative();
    Real last = 0;
    for (int k = 1; k <= order; ++k) {
        const Real coef = to_real(bernoulli_plus(static_cast<unsigned>(2 * k)) /
                                  BigRational(factorial(static_cast<unsigned>(2 * k))));
        last = coef * d.eval(x);
        value -= last;
        d = d.derivative().derivative();
    }
    double mag = 0.0;
    for (const auto& [key, c] : terms_) mag += abs_double(c * pow(x, 1 - key.first) * pow(log(x), key.second));
    const double err = abs_double(last) + 100.0 * mag * working_epsilon();
    return Approx(std::move(value), err);
}

LogPowerSeries harmonic_asymptotic_series(int q, int max_exponent) {
    if (q < 1) throw DomainError("harmonic_asymptotic_series requires q >= 1");
    LogPowerSeries s;
    if (q == 1) {
        s.add(0, 1, Real(1));
        if (max_exponent >= 1) s.add(1, 0, Real(0.5));
        for (int k = 1; 2 * k <= max_exponent; ++k) s.add(2 * k, 0, -to_real(asym_coeff(1, k)));
    } else {
        s.add(q - 1, 0, Real(-1) / (q - 1));
        if (max_exponent >= q) s.add(q, 0, Real(0.5));
        for (int k = 1; q + 2 * k - 1 <= max_exponent; ++k) s.add(q + 2 * k - 1, 0, -to_real(asym_coeff(q, k)));
    }
    return s;
}

std::vector<std::vector<Real>> fornberg_weights(const Real& x0, const std::vector<Real>& xs, int max_order) {
    const std::size_t n = xs.size();
    const auto m = static_cast<std::size_t>(max_order);
    std::vector<std::vector<Real>> C(n, std::vector<Real>(m + 1, Real(0)));
    Real c1 = 1;
    Real c4 = xs[0] - x0;
    C[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t mn = std::min(i, m);
        Real c2 = 1;
        const Real c5 = c4;
        c4 = xs[i] - x0;
        for (std::size_t j = 0; j < i; ++j) {
            const Real c3 = xs[i] - xs[j];
            c2 *= c3;
            if (j == i - 1) {
                for (std::size_t k = mn; k >= 1; --k)
                    C[i][k] = c1 * (Real(k) * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
                C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
            }
            for (std::size_t k = mn; k >= 1; --k) C[j][k] = (c4 * C[j][k] - Real(k) * C[j][k - 1]) / c3;
            C[j][0] = c4 * C[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<std::vector<Real>> out(m + 1, std::vector<Real>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) out[k][i] = C[i][k];
    return out;
}

}  // namespace hhsum
