#include "hhsum/sequences.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace hhsum {

namespace {

BigRational unit_fraction_power(std::uint64_t j, int p) {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(p));
    return BigRational(BigInt(1), den);
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

BigRational harmonic(std::uint64_t n, int p) {
    if (p <= 0) return faulhaber_sum(n, static_cast<unsigned>(-p));
    BigRational acc;
    for (std::uint64_t j = 1; j <= n; ++j) acc += unit_fraction_power(j, p);
    return acc;
}

BigRational harmonic_alt(std::uint64_t n, int m) {
    if (m < 1) throw std::domain_error("harmonic_alt requires m >= 1");
    BigRational acc;
    for (std::uint64_t j = 1; j <= n; ++j) {
        if (j % 2 == 1)
            acc += unit_fraction_power(j, m);
        else
            acc -= unit_fraction_power(j, m);
    }
    return acc;
}

namespace {

// Prefix table of H_j^(p,r), j = 0..size-1, for one (p, r).
struct HyperRow {
    std::vector<BigRational> values{BigRational(0)};
};

struct HyperCache {
    std::shared_mutex mutex;
    std::map<std::pair<int, int>, HyperRow> rows;
};

HyperCache& hyper_cache() {
    static HyperCache cache;
    return cache;
}

}  // namespace

BigRational hyperharmonic(std::uint64_t n, int p, int r) {
    if (p < 1 || r < 1) throw std::domain_error("hyperharmonic requires p >= 1 and r >= 1");
    auto& cache = hyper_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.rows.find({p, r});
        if (it != cache.rows.end() && n < it->second.values.size()) return it->second.values[n];
    }
    // Build the rows for orders 1..r up to n; levels below r are filled as a side effect.
    std::unique_lock lock(cache.mutex);
    for (int level = 1; level <= r; ++level) {
        auto& row = cache.rows[{p, level}].values;
        for (std::uint64_t j = row.size(); j <= n; ++j) {
            if (level == 1)
                row.push_back(row.back() + unit_fraction_power(j, p));
            else
                row.push_back(row.back() + cache.rows[{p, level - 1}].values[j]);
        }
    }
    return cache.rows[{p, r}].values[n];
}

CoeffTable::CoeffTable(int order) {
    if (order < 1) throw std::domain_error("coefficient table order must be >= 1");
    CoeffTable t;
    t.order_ = 1;
    t.entries_[{0, 0}] = BigRational(1);
    while (t.order_ < order) t = t.next();
    *this = std::move(t);
}

const BigRational& CoeffTable::at(int m, int j) const {
    auto it = entries_.find({m, j});
    if (it == entries_.end()) throw std::out_of_range("a(r,m,j) index outside the triangular domain");
    return it->second;
}

CoeffTable CoeffTable::next() const {
    const int r = order_;
    CoeffTable out;
    out.order_ = r + 1;
    auto a = [this](int m, int j) -> const BigRational& { return at(m, j); };

    // a(r+1, r, 0)
    {
        BigRational acc;
        for (int m = 0; m <= r - 1; ++m) acc += a(m, r - m - 1) / BigRational(r - m);
        out.entries_[{r, 0}] = -acc;
    }
    // a(r+1, m, l), 1 <= l <= r-m
    for (int m = 0; m <= r - 1; ++m) {
        for (int l = 1; l <= r - m; ++l) {
            BigRational acc;
            for (int j = l - 1; j <= r - 1 - m; ++j) {
                acc += a(m, j) / BigRational(j + 1) * BigRational(binomial(j + 1, j - l + 1)) *
                       bernoulli_plus(static_cast<unsigned>(j - l + 1));
            }
            out.entries_[{m, l}] = acc;
        }
    }
    // a(r+1, m, 0) with the inner sum D(r,m,j,y); lower bounds max{0, m-y-1}.
    for (int m = 0; m <= r - 1; ++m) {
        BigRational acc;
        for (int y = 0; y <= m; ++y) {
            const int lo = std::max(0, m - y - 1);
            for (int j = lo; j <= r - 1 - y; ++j) {
                BigRational d;
                for (int l = lo; l <= j; ++l) {
                    d += BigRational(BigInt(1), BigInt(j + 1)) * BigRational(binomial(j + 1, j - l)) *
                         bernoulli_plus(static_cast<unsigned>(j - l)) * BigRational(binomial(l + 1, m - y)) *
                         BigRational(parity_sign(1 + l - m + y));
                }
                acc += a(y, j) * d;
            }
        }
        out.entries_[{m, 0}] = -acc;
    }
    return out;
}

namespace {

struct TableCache {
    std::mutex mutex;
    std::deque<CoeffTable> tables;  // tables[i] has order i+1; deque keeps references stable
};

TableCache& table_cache() {
    static TableCache cache;
    return cache;
}

}  // namespace

const CoeffTable& coeff_table(int r) {
    if (r < 1) throw std::domain_error("coefficient table order must be >= 1");
    auto& cache = table_cache();
    std::lock_guard lock(cache.mutex);
    if (cache.tables.empty()) cache.tables.emplace_back(1);
    while (static_cast<int>(cache.tables.size()) < r) cache.tables.push_back(cache.tables.back().next());
    return cache.tables[static_cast<std::size_t>(r - 1)];
}

BigRational hyperharmonic_via_coeffs(std::uint64_t n, int p, int r) {
    const auto& table = coeff_table(r);
    const BigRational x{BigInt(static_cast<unsigned long>(n))};
    BigRational acc;
    for (const auto& [idx, coeff] : table.entries()) {
        const auto [m, j] = idx;
        acc += coeff * x.pow(static_cast<unsigned>(j)) * harmonic(n, p - m);
    }
    return acc;
}

}  // namespace hhsum
