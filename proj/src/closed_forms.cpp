#include "hhsum/closed_forms.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "hhsum/config.hpp"
#include "hhsum/constants.hpp"
#include "hhsum/errors.hpp"
#include "hhsum/euler_sums.hpp"
#include "hhsum/sequences.hpp"

namespace hhsum {

namespace {

BigRational sgn(long e) { return BigRational(e % 2 == 0 ? 1 : -1); }

// (-1)^e / r^d
BigRational signed_inv_power(long e, int r, int d) {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(d));
    return sgn(e) * BigRational(BigInt(1), den);
}

Approx exact(const BigRational& q) { return Approx::exact(q); }

Approx Spp(int p, int q) { return linear_euler(p, q, Sign::Plus, Sign::Plus); }
Approx Spm(int p, int q) { return linear_euler(p, q, Sign::Plus, Sign::Minus); }
Approx Sppp(int p1, int p2, int q) { return quadratic_euler(p1, p2, q, Sign::Plus); }
Approx Sppm(int p1, int p2, int q) { return quadratic_euler(p1, p2, q, Sign::Minus); }

using Key = std::tuple<int, int, int, int, int>;

struct FormCache {
    std::mutex mutex;
    std::uint64_t generation = 0;
    std::map<Key, Approx> values;
};

FormCache& form_cache() {
    static FormCache cache;
    return cache;
}

template <class F>
Approx memo(const Key& key, F compute) {
    auto& cache = form_cache();
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
    Approx v = compute();
    std::lock_guard lock(cache.mutex);
    if (cache.generation == gen) cache.values.emplace(key, v);
    return v;
}

enum Tag { kS = 0, kSb, kQb, kT, kTb, kL1 };

Approx S_positive(int p, int m, int r, bool alt) {
    Approx v;
    if (!alt) {
        for (int i = 2; i <= m; ++i) v += Spp(p, i) * signed_inv_power(m - i, r, m - i + 1);
        v += lemma1(p, r) * signed_inv_power(m - 1, r, m);
        return v;
    }
    for (int i = 1; i <= m; ++i) v += Spm(p, i) * signed_inv_power(m - i, r, m - i + 1);
    v += S_boundary(p, r) * signed_inv_power(m, r, m);
    return v;
}

Approx S_power_sum(int q, int m, int r, bool alt) {
    const auto c = faulhaber_coeffs(static_cast<unsigned>(q));
    Approx v;
    for (int l = 0; l <= q; ++l) {
        if (c[static_cast<std::size_t>(l)].is_zero()) continue;
        const int t = m - q - 1 + l;
        Approx inner;
        if (!alt) {
            for (int i = 2; i <= t; ++i) inner += zeta(i) * signed_inv_power(t - i, r, t - i + 1);
            inner += exact(harmonic(static_cast<std::uint64_t>(r), 1) * signed_inv_power(t - 1, r, t));
        } else {
            for (int i = 1; i <= t; ++i) inner += zeta_alt(i) * signed_inv_power(t - i, r, t - i + 1);
            inner += (zeta_alt(1) - exact(harmonic_alt(static_cast<std::uint64_t>(r), 1))) * signed_inv_power(t + r, r, t);
        }
        v += inner * c[static_cast<std::size_t>(l)];
    }
    return v;
}

}  // namespace

SumSpec SumSpec::linear(int p, int s, int m, int k, bool alt) {
    SumSpec spec;
    spec.kind = Kind::Linear;
    spec.p = p;
    spec.s = s;
    spec.m = m;
    spec.k = k;
    spec.alternating = alt;
    return spec;
}

SumSpec SumSpec::quadratic(int p1, int s1, int p2, int s2, int m, int k, bool alt) {
    SumSpec spec;
    spec.kind = Kind::Quadratic;
    spec.p = p1;
    spec.s = s1;
    spec.p2 = p2;
    spec.s2 = s2;
    spec.m = m;
    spec.k = k;
    spec.alternating = alt;
    return spec;
}

void SumSpec::validate() const {
    if (p < 1 || s < 1 || m < 1 || k < 1) throw DomainError("p, s, m, k must be positive integers");
    if (kind == Kind::Linear) {
        if (m < s) throw DomainError("m >= s violated");
        return;
    }
    if (p2 < 1 || s2 < 1) throw DomainError("p2, s2 must be positive integers");
    if (m < s + s2 - 1) throw DomainError("m >= s1+s2-1 violated");
}

std::string SumSpec::id() const {
    std::ostringstream os;
    os << (kind == Kind::Linear ? "lin" : "quad") << (alternating ? "-" : "+") << ":" << params();
    return os.str();
}

std::string SumSpec::params() const {
    std::ostringstream os;
    if (kind == Kind::Linear)
        os << "p=" << p << ",s=" << s;
    else
        os << "p1=" << p << ",s1=" << s << ",p2=" << p2 << ",s2=" << s2;
    os << ",m=" << m << ",k=" << k << ",alt=" << (alternating ? 1 : 0);
    return os.str();
}

std::vector<std::pair<int, BigRational>> recip_binomial_weights(int k) {
    if (k < 1) throw DomainError("recip_binomial_weights requires k >= 1");
    std::vector<std::pair<int, BigRational>> w;
    for (int r = 1; r <= k; ++r) w.emplace_back(r, sgn(r + 1) * BigRational(r) * BigRational(binomial(k, r)));
    return w;
}

Approx lemma1(int s, int a) {
    if (s < 1 || a < 1) throw DomainError("lemma1 requires s >= 1 and a >= 1");
    return memo({kL1, s, a, 0, 0}, [&] {
        Approx v = zeta(s + 1);
        BigRational js;
        for (int j = 1; j <= a - 1; ++j)
            js += harmonic(static_cast<std::uint64_t>(j), 1) / BigRational(j).pow(static_cast<unsigned>(s));
        v += exact(sgn(s + 1) * js);
        for (int i = 2; i <= s; ++i)
            v += zeta(i) * (sgn(s - i) * harmonic(static_cast<std::uint64_t>(a - 1), s - i + 1));
        return v;
    });
}

Approx S_closed(int p, int m, int r, bool alt) {
    if (r < 1) throw DomainError("S(p,m,r) requires r >= 1");
    if (p >= 1) {
        if (!alt && m < 1) throw DomainError("S(p,m,r) with p >= 1 requires m >= 1");
        if (alt && m < 0) throw DomainError("alternating S(p,m,r) with p >= 1 requires m >= 0");
    } else {
        if (!alt && m < 2 - p) throw DomainError("S(p,m,r) with p <= 0 requires m >= 2-p");
        if (alt && m < 1 - p) throw DomainError("alternating S(p,m,r) with p <= 0 requires m >= 1-p");
    }
    return memo({kS, p, m, r, alt ? 1 : 0}, [&] { return p >= 1 ? S_positive(p, m, r, alt) : S_power_sum(-p, m, r, alt); });
}

Approx S_boundary(int p, int r) {
    if (p < 1 || r < 1) throw DomainError("S_boundary requires p >= 1 and r >= 1");
    return memo({kSb, p, r, 0, 0}, [&] {
        const auto R = static_cast<std::uint64_t>(r - 1);
        Approx v = Spm(p, 1) * sgn(r) + zeta_alt(p + 1) * sgn(r - 1);
        for (int j = 1; j <= p; ++j) v += zeta_alt(j) * (sgn(p - j + r) * harmonic_alt(R, p - j + 1));
        v += zeta_alt(1) * (sgn(p + r - 1) * harmonic(R, p));
        BigRational tail;
        for (int n = 1; n <= r - 1; ++n)
            tail += harmonic_alt(static_cast<std::uint64_t>(n), 1) / BigRational(n).pow(static_cast<unsigned>(p));
        v += exact(sgn(p + r) * tail);
        return v;
    });
}

Approx quadratic_base(int p1, int p2, int r) {
    if (p1 < 1 || p2 < 1 || r < 1) throw DomainError("quadratic_base requires p1, p2, r >= 1");
    return memo({kQb, p1, p2, r, 0}, [&] {
        Approx v = Spp(p1, p2 + 1) + Spp(p2, p1 + 1) - zeta(p1 + p2 + 1);
        for (int b = 1; b <= r - 1; ++b)
            v += S_closed(p1, p2, b, false) + S_closed(p2, p1, b, false) - S_closed(0, p1 + p2 + 1, b, false);
        return v;
    });
}

Approx T_boundary(int p1, int p2, int r) {
    if (p1 < 1 || p2 < 1 || r < 1) throw DomainError("T_boundary requires p1, p2, r >= 1");
    if (p1 > p2) std::swap(p1, p2);
    return memo({kTb, p1, p2, r, 0}, [&] {
        Approx v = (Sppm(p1, p2, 1) - Spm(p1, p2 + 1) - Spm(p2, p1 + 1) + zeta_alt(p1 + p2 + 1)) * sgn(r);
        for (int j = 1; j <= r - 1; ++j) {
            v += (S_closed(p1, p2, j, true) + S_closed(p2, p1, j, true)) * sgn(r - 1 - j);
            v += S_closed(0, p1 + p2 + 1, j, true) * sgn(r - j);
        }
        return v;
    });
}

Approx T_closed(int p1, int p2, int m, int r, bool alt) {
    if (r < 1) throw DomainError("T(p1,p2,m,r) requires r >= 1");
    if (p1 <= 0 && p2 > 0) std::swap(p1, p2);
    if (p1 >= 1 && p2 >= 1) {
        if (p1 > p2) std::swap(p1, p2);
        if (!alt && m < 1) throw DomainError("T(p1,p2,m,r) with p1, p2 >= 1 requires m >= 1");
        if (alt && m < 0) throw DomainError("alternating T(p1,p2,m,r) with p1, p2 >= 1 requires m >= 0");
    } else if (p1 >= 1) {
        if (!alt && m < 2 - p2) throw DomainError("T(p1,p2,m,r) with one order q <= 0 requires m >= 2-q");
        if (alt && m < 1 - p2) throw DomainError("alternating T(p1,p2,m,r) with one order q <= 0 requires m >= 1-q");
    } else {
        if (!alt && m < 3 - p1 - p2) throw DomainError("T(p1,p2,m,r) with both orders <= 0 requires m >= 3-p1-p2");
        if (alt && m < 2 - p1 - p2) throw DomainError("alternating T(p1,p2,m,r) with both orders <= 0 requires m >= 2-p1-p2");
    }
    return memo({kT, p1, p2, m, r * 2 + (alt ? 1 : 0)}, [&] {
        Approx v;
        if (p1 >= 1 && p2 >= 1) {
            if (!alt) {
                for (int i = 2; i <= m; ++i) v += Sppp(p1, p2, i) * signed_inv_power(m - i, r, m - i + 1);
                v += quadratic_base(p1, p2, r) * signed_inv_power(m - 1, r, m);
            } else {
                for (int i = 1; i <= m; ++i) v += Sppm(p1, p2, i) * signed_inv_power(m - i, r, m - i + 1);
                v += T_boundary(p1, p2, r) * signed_inv_power(m, r, m);
            }
            return v;
        }
        if (p1 >= 1) {
            const int q = -p2;
            const auto c = faulhaber_coeffs(static_cast<unsigned>(q));
            for (int l = 0; l <= q; ++l) {
                if (c[static_cast<std::size_t>(l)].is_zero()) continue;
                v += S_closed(p1, m - q - 1 + l, r, alt) * c[static_cast<std::size_t>(l)];
            }
            return v;
        }
        const int q1 = -p1;
        const int q2 = -p2;
        const auto c1 = faulhaber_coeffs(static_cast<unsigned>(q1));
        const auto c2 = faulhaber_coeffs(static_cast<unsigned>(q2));
        for (int l1 = 0; l1 <= q1; ++l1)
            for (int l2 = 0; l2 <= q2; ++l2) {
                const BigRational c = c1[static_cast<std::size_t>(l1)] * c2[static_cast<std::size_t>(l2)];
                if (c.is_zero()) continue;
                v += S_closed(0, m - q1 - q2 - 1 + l1 + l2, r, alt) * c;
            }
        return v;
    });
}

Approx theorem_linear(const SumSpec& spec) {
    if (spec.kind != SumSpec::Kind::Linear) throw DomainError("theorem_linear needs a linear spec");
    spec.validate();
    const auto& table = coeff_table(spec.s);
    const auto weights = recip_binomial_weights(spec.k);
    Approx v;
    for (const auto& [idx, a] : table.entries()) {
        if (a.is_zero()) continue;
        for (const auto& [r, w] : weights)
            v += S_closed(spec.p - idx.first, spec.m - idx.second, r, spec.alternating) * (a * w);
    }
    return v;
}

Approx theorem_quadratic(const SumSpec& spec) {
    if (spec.kind != SumSpec::Kind::Quadratic) throw DomainError("theorem_quadratic needs a quadratic spec");
    spec.validate();
    const auto& t1 = coeff_table(spec.s);
    const auto& t2 = coeff_table(spec.s2);
    const auto weights = recip_binomial_weights(spec.k);
    Approx v;
    for (const auto& [i1, a1] : t1.entries())
        for (const auto& [i2, a2] : t2.entries()) {
            const BigRational a = a1 * a2;
            if (a.is_zero()) continue;
            for (const auto& [r, w] : weights)
                v += T_closed(spec.p - i1.first, spec.p2 - i2.first, spec.m - i1.second - i2.second, r,
                              spec.alternating) *
                     (a * w);
        }
    return v;
}

Approx theorem_value(const SumSpec& spec) {
    return spec.kind == SumSpec::Kind::Linear ? theorem_linear(spec) : theorem_quadratic(spec);
}

}  // namespace hhsum
