#include "hhsum/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hhsum/acceleration.hpp"
#include "hhsum/config.hpp"
#include "hhsum/errors.hpp"

namespace hhsum {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::pow;

namespace {

struct ConstCache {
    std::mutex mutex;
    std::uint64_t generation = 0;
    std::map<std::pair<int, int>, Approx> values;  // (kind, s)
};

ConstCache& const_cache() {
    static ConstCache cache;
    return cache;
}

enum Kind { kZeta = 0, kZetaEM, kZetaAltDirect, kCatalan, kGamma };

template <class F>
Approx cached(Kind kind, int s, F compute) {
    auto& cache = const_cache();
    const auto gen = config_generation();
    {
        std::lock_guard lock(cache.mutex);
        if (cache.generation != gen) {
            cache.values.clear();
            cache.generation = gen;
        }
        auto it = cache.values.find({kind, s});
        if (it != cache.values.end()) return it->second;
    }
    Approx v = compute();
    std::lock_guard lock(cache.mutex);
    if (cache.generation == gen) cache.values.emplace(std::make_pair(static_cast<int>(kind), s), v);
    return v;
}

Approx eta_series(int s) {
    return cvz_sum([s](std::int64_t k) { return 1 / pow(Real(k + 1), s); });
}

}  // namespace

Approx zeta(int s) {
    if (s <= 1) throw DivergenceError("zeta(s) diverges for s <= 1");
    return cached(kZeta, s, [s] {
        if (s % 2 == 0) {
            // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
            const int k = s / 2;
            BigRational c = bernoulli_plus(static_cast<unsigned>(s)) / BigRational(factorial(static_cast<unsigned>(s)) * 2);
            if (k % 2 == 0) c = -c;
            Real v = to_real(c) * pow(2 * pi_real(), s);
            const double e = 4.0 * abs_double(v) * working_epsilon();
            return Approx(std::move(v), e);
        }
        Approx eta = eta_series(s);
        const Real factor = 1 - pow(Real(2), 1 - s);
        eta.value /= factor;
        eta.err /= factor.convert_to<double>();
        return eta;
    });
}

Approx zeta_euler_maclaurin(int s) {
    if (s <= 1) throw DivergenceError("zeta(s) diverges for s <= 1");
    return cached(kZetaEM, s, [s] {
        const std::int64_t N = 64;
        Real head = 0;
        for (std::int64_t n = 1; n < N; ++n) head += 1 / pow(Real(n), s);
        LogPowerSeries g;
        g.add(s, 0, Real(1));
        // sum_{n>=N} = g(N) + sum_{n>N}
        Approx tail = g.tail_after(N, 30);
        tail.value += head + g.eval(Real(N));
        tail.terms = N;
        return tail;
    });
}

Approx zeta_alt(int s) {
    if (s <= 0) throw DomainError("zeta_alt requires s >= 1");
    if (s == 1) return log2_approx();
    Approx z = zeta(s);
    const BigRational factor = BigRational(1) - BigRational(BigInt(1), BigInt(1) << (s - 1));
    return z * factor;
}

Approx zeta_alt_direct(int s) {
    if (s <= 0) throw DomainError("zeta_alt requires s >= 1");
    return cached(kZetaAltDirect, s, [s] { return eta_series(s); });
}

Approx pi_approx() {
    config();
    return Approx::exact(pi_real());
}

Approx log2_approx() {
    config();
    return Approx::exact(log2_real());
}

Approx polylog(int p, const Real& x) {
    config();
    if (p < 1) throw DomainError("polylog requires p >= 1");
    if (abs(x) > 1) throw DomainError("polylog requires |x| <= 1");
    if (x == 1) {
        if (p == 1) throw DivergenceError("Li_1(1) diverges");
        return zeta(p);
    }
    if (x == -1) return -zeta_alt(p);
    if (x == 0) return Approx(Real(0), 0.0);
    const double eps = working_epsilon();
    if (abs(x) <= Real(0.5)) {
        // Direct series; |tail after n| <= |x|^{n+1}/(1-|x|).
        Real sum = 0;
        Real xn = x;
        const Real ax = abs(x);
        std::int64_t n = 1;
        for (;; ++n) {
            sum += xn / pow(Real(n), p);
            const Real bound = abs(xn) * ax / (1 - ax);
            if (bound < abs(sum) * Real(eps) * Real(1e-2) || bound < Real(1e-300)) {
                return Approx(std::move(sum), bound.convert_to<double>() + 10.0 * eps * abs_double(sum), n);
            }
            xn *= x;
        }
    }
    if (x < 0) {
        // -sum (-1)^{k} |x|^{k+1}/(k+1)^p
        const Real ax = abs(x);
        Approx v = cvz_sum([&ax, p](std::int64_t k) { return pow(ax, k + 1) / pow(Real(k + 1), p); });
        return -v;
    }
    // 1/2 < x < 1: expansion in mu = log x around 0.
    const Real mu = log(x);
    Real sum = 0;
    if (p >= 2) {
        BigRational h;
        for (int j = 1; j <= p - 1; ++j) h += BigRational(BigInt(1), BigInt(j));
        sum += pow(mu, p - 1) / to_real(BigRational(factorial(static_cast<unsigned>(p - 1)))) * (to_real(h) - log(-mu));
    } else {
        sum += -log(-mu);
    }
    double err = 0.0;
    Real mu_k = 1;
    Real kfact = 1;
    for (int k = 0; k < 2000; ++k) {
        if (k > 0) {
            mu_k *= mu;
            kfact *= k;
        }
        if (k == p - 1) continue;
        const int arg = p - k;
        Real z;
        if (arg >= 2) {
            Approx za = zeta(arg);
            err += za.err * abs_double(mu_k / kfact);
            z = za.value;
        } else {
            // zeta(-n) = -B+_{n+1}/(n+1)
            const int n = -arg;
            z = to_real(-bernoulli_plus(static_cast<unsigned>(n + 1)) / BigRational(n + 1));
        }
        const Real term = z * mu_k / kfact;
        sum += term;
        if (k > p + 2 && z != 0 && abs(term) < abs(sum) * Real(eps) * Real(1e-3)) {
            err += 2 * abs_double(term);
            break;
        }
    }
    err += 10.0 * eps * abs_double(sum);
    return Approx(std::move(sum), err);
}

Approx ti2(const Real& x) {
    config();
    if (x < 0 || x > 1) throw DomainError("ti2 requires 0 <= x <= 1");
    if (x == 0) return Approx(Real(0), 0.0);
    if (x == 1) return catalan();
    const double eps = working_epsilon();
    if (x <= Real(0.5)) {
        // Alternating with decreasing terms: |error| <= first omitted term.
        Real sum = 0;
        const Real x2 = x * x;
        Real xp = x;
        for (std::int64_t n = 0;; ++n) {
            const Real term = xp / pow(Real(2 * n + 1), 2);
            if (n % 2 == 0)
                sum += term;
            else
                sum -= term;
            xp *= x2;
            const Real next = xp / pow(Real(2 * n + 3), 2);
            if (next < abs(sum) * Real(eps) * Real(1e-2)) return Approx(std::move(sum), next.convert_to<double>() + 10.0 * eps * abs_double(sum), n + 1);
        }
    }
    const Real xx = x;
    return cvz_sum([&xx](std::int64_t k) { return pow(xx, 2 * k + 1) / pow(Real(2 * k + 1), 2); });
}

Approx catalan() {
    return cached(kCatalan, 0, [] { return cvz_sum([](std::int64_t k) { return 1 / pow(Real(2 * k + 1), 2); }); });
}

namespace detail {

Approx euler_gamma() {
    return cached(kGamma, 0, [] {
        const std::int64_t N = 1000;
        Real h = 0;
        for (std::int64_t n = 1; n <= N; ++n) h += Real(1) / n;
        Real g = h - harmonic_asymptotic(1, Real(N));
        const double e = 10.0 * static_cast<double>(N) * working_epsilon();
        return Approx(std::move(g), e, N);
    });
}

}  // namespace detail

}  // namespace hhsum
