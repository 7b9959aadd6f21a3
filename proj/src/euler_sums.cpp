#include "hhsum/euler_sums.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hhsum/acceleration.hpp"
#include "hhsum/config.hpp"
#include "hhsum/constants.hpp"
#include "hhsum/errors.hpp"

namespace hhsum {

using boost::multiprecision::pow;

namespace {

constexpr int kTailOrder = 8;

void check_orders(int p) {
    if (p < 1) throw DomainError("Euler sum orders must be >= 1");
}

void check_convergent(int q, Sign outer) {
    if (outer == Sign::Plus && q < 2) throw DivergenceError("non-alternating Euler sum requires q >= 2");
    if (outer == Sign::Minus && q < 1) throw DivergenceError("alternating Euler sum requires q >= 1");
}

// Exponent headroom so that N^{-extra} is below the working precision.
int tail_headroom(std::int64_t N) {
    const double per = std::log10(static_cast<double>(N));
    return static_cast<int>(std::ceil((working_digits() + 3) / per)) + 1;
}

// sum_{n>=1} prod_i H_n^(p_i) / n^q for every q in [2, q_max], partial sums
// to N plus an Euler-Maclaurin tail on the asymptotic expansion.
std::vector<Approx> positive_pass(const std::vector<int>& ps, int q_max, std::int64_t N) {
    const int pmax = *std::max_element(ps.begin(), ps.end());
    const int top = std::max(pmax, q_max);
    std::vector<Real> H(ps.size(), Real(0));
    std::vector<Real> partial(static_cast<std::size_t>(q_max + 1), Real(0));
    std::vector<Real> pw(static_cast<std::size_t>(top + 1));
    Real prod;
    for (std::int64_t n = 1; n <= N; ++n) {
        pw[1] = Real(1) / n;
        for (int k = 2; k <= top; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * pw[1];
        prod = 1;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            H[i] += pw[static_cast<std::size_t>(ps[i])];
            prod *= H[i];
        }
        for (int q = 2; q <= q_max; ++q) partial[static_cast<std::size_t>(q)] += prod * pw[static_cast<std::size_t>(q)];
    }
    const Real x(N);
    const int extra = tail_headroom(N);
    std::vector<Approx> out(static_cast<std::size_t>(q_max + 1));
    for (int q = 2; q <= q_max; ++q) {
        const int e_max = q + extra;
        LogPowerSeries g;
        g.add(0, 0, Real(1));
        for (std::size_t i = 0; i < ps.size(); ++i) {
            LogPowerSeries h = harmonic_asymptotic_series(ps[i], e_max);
            h.add(0, 0, H[i] - harmonic_asymptotic(ps[i], x));
            g = g.times(h, e_max);
        }
        g = g.shifted(q);
        Approx tail = g.tail_after(N, kTailOrder);
        Real value = partial[static_cast<std::size_t>(q)] + tail.value;
        const double trunc = abs_double(value) * std::pow(static_cast<double>(N), -extra);
        const double rounding = 100.0 * static_cast<double>(N) * abs_double(value) * working_epsilon();
        out[static_cast<std::size_t>(q)] = Approx(std::move(value), tail.err + trunc + rounding, N);
    }
    return out;
}

// Alternating outer sign, inner harmonic numbers: CVZ on the raw terms.
Approx alternating_harmonic_product(const std::vector<int>& ps, int q) {
    const int depth = cvz_default_depth();
    std::vector<Real> H(ps.size(), Real(0));
    std::vector<Real> a;
    a.reserve(static_cast<std::size_t>(2 * depth));
    for (std::int64_t n = 1; n <= 2 * depth; ++n) {
        const Real nn(n);
        Real prod = 1;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            H[i] += 1 / pow(nn, ps[i]);
            prod *= H[i];
        }
        a.push_back(prod / pow(nn, q));
    }
    return cvz_sum(a);
}

// E_p(n) = sum_{i>=1} (-1)^{i-1} (n+i)^{-p} = (-1)^n (zeta_alt(p) - Hbar_n^(p)).
// Asymptotic: n^{-p}/2 - sum_{k odd} (2^{k+1}-1) B_{k+1} (p)_k/(k+1)! n^{-p-k}.
LogPowerSeries alternating_remainder_series(int p, int e_max) {
    LogPowerSeries s;
    s.add(p, 0, Real(0.5));
    for (int k = 1; p + k <= e_max; k += 2) {
        const BigRational c = BigRational((BigInt(1) << (k + 1)) - 1) * bernoulli_plus(static_cast<unsigned>(k + 1)) *
                              pochhammer(BigRational(p), static_cast<unsigned>(k)) /
                              BigRational(factorial(static_cast<unsigned>(k + 1)));
        s.add(p + k, 0, -to_real(c));
    }
    return s;
}

Approx inner_alternating(int p, int q, Sign outer) {
    const Approx zb = zeta_alt(p);
    if (outer == Sign::Plus) {
        // zeta_alt(p) zeta(q) + sum (-1)^{n+1} E_p(n)/n^q
        const int depth = cvz_default_depth();
        std::vector<Real> a;
        Real hbar = 0;
        for (std::int64_t n = 1; n <= 2 * depth; ++n) {
            const Real t = 1 / pow(Real(n), p);
            hbar += (n % 2 == 1) ? t : Real(-t);
            const Real e = (n % 2 == 0) ? Real(zb.value - hbar) : Real(hbar - zb.value);
            a.push_back(e / pow(Real(n), q));
        }
        Approx acc = cvz_sum(a);
        acc.err += zb.err * 2.0;
        return zb * zeta(q) + acc;
    }
    // zeta_alt(p) zeta_alt(q) + sum E_p(n)/n^q (positive terms)
    const std::int64_t N = config().euler_truncation;
    Real hbar = 0;
    Real partial = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
        const Real t = 1 / pow(Real(n), p);
        hbar += (n % 2 == 1) ? t : Real(-t);
        const Real e = (n % 2 == 0) ? Real(zb.value - hbar) : Real(hbar - zb.value);
        partial += e / pow(Real(n), q);
    }
    const int extra = tail_headroom(N);
    const LogPowerSeries g = alternating_remainder_series(p, p + q + extra).shifted(q);
    Approx tail = g.tail_after(N, kTailOrder);
    const double rounding = 100.0 * static_cast<double>(N) * (abs_double(partial) + 1.0) * working_epsilon();
    // Each E_p(n) inherits zb's error; the sum of n^{-q} is at most zeta(q) <= 2 (q >= 2) or the
    // alternating truncation N (q = 1); bound generously.
    const double inherited = zb.err * (q >= 2 ? 2.0 : static_cast<double>(N));
    Approx sum(partial + tail.value, tail.err + rounding + inherited, N);
    return zb * zeta_alt(q) + sum;
}

struct EulerCache {
    std::mutex mutex;
    std::uint64_t generation = 0;
    std::map<std::string, Approx> values;
};

EulerCache& euler_cache() {
    static EulerCache cache;
    return cache;
}

constexpr int kPassQ = 12;

std::string key_of(const char* kind, std::initializer_list<int> xs) {
    std::string k(kind);
    for (int x : xs) k += ":" + std::to_string(x);
    return k;
}

// Looks up `key`; on a miss runs `fill`, which inserts one or more entries.
template <class Fill>
Approx lookup(const std::string& key, Fill fill) {
    auto& cache = euler_cache();
    const auto gen = config_generation();
    {
        std::lock_guard lock(cache.mutex);
        if (cache.generation != gen) {
            cache.values.clear();
            cache.generation = gen;
        }
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    std::map<std::string, Approx> fresh;
    fill(fresh);
    std::lock_guard lock(cache.mutex);
    if (cache.generation == gen)
        for (auto& [k, v] : fresh) cache.values.emplace(k, v);
    return fresh.at(key);
}

}  // namespace

Approx linear_euler(int p, int q, Sign inner, Sign outer) {
    check_orders(p);
    check_convergent(q, outer);
    if (inner == Sign::Minus) {
        return lookup(key_of(outer == Sign::Plus ? "L-+" : "L--", {p, q}),
                      [&](auto& out) { out[key_of(outer == Sign::Plus ? "L-+" : "L--", {p, q})] = inner_alternating(p, q, outer); });
    }
    if (outer == Sign::Minus) {
        return lookup(key_of("L+-", {p, q}), [&](auto& out) { out[key_of("L+-", {p, q})] = alternating_harmonic_product({p}, q); });
    }
    return lookup(key_of("L++", {p, q}), [&](auto& out) {
        const int qm = std::max(q, kPassQ);
        const auto all = positive_pass({p}, qm, config().euler_truncation);
        for (int qq = 2; qq <= qm; ++qq) out[key_of("L++", {p, qq})] = all[static_cast<std::size_t>(qq)];
    });
}

Approx quadratic_euler(int p1, int p2, int q, Sign outer) {
    check_orders(p1);
    check_orders(p2);
    check_convergent(q, outer);
    if (p1 > p2) std::swap(p1, p2);
    if (outer == Sign::Minus) {
        return lookup(key_of("Q-", {p1, p2, q}),
                      [&](auto& out) { out[key_of("Q-", {p1, p2, q})] = alternating_harmonic_product({p1, p2}, q); });
    }
    return lookup(key_of("Q+", {p1, p2, q}), [&](auto& out) {
        const int qm = std::max(q, kPassQ);
        const auto all = positive_pass({p1, p2}, qm, config().euler_truncation);
        for (int qq = 2; qq <= qm; ++qq) out[key_of("Q+", {p1, p2, qq})] = all[static_cast<std::size_t>(qq)];
    });
}

std::pair<Approx, Approx> euler_reduction_check(int m) {
    if (m < 2) throw DomainError("euler_reduction_check requires m >= 2");
    Approx lhs = linear_euler(1, m, Sign::Plus, Sign::Plus) * BigRational(2);
    Approx rhs = zeta(m + 1) * BigRational(m + 2);
    for (int n = 1; n <= m - 2; ++n) rhs -= zeta(m - n) * zeta(n + 1);
    return {lhs, rhs};
}

Approx linear_euler_at(int p, int q, std::int64_t N) {
    check_orders(p);
    check_convergent(q, Sign::Plus);
    config();
    return positive_pass({p}, q, N)[static_cast<std::size_t>(q)];
}

Approx quadratic_euler_at(int p1, int p2, int q, std::int64_t N) {
    check_orders(p1);
    check_orders(p2);
    check_convergent(q, Sign::Plus);
    config();
    return positive_pass({p1, p2}, q, N)[static_cast<std::size_t>(q)];
}

}  // namespace hhsum
