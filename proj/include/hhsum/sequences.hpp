#pragma once

// Exact harmonic-type sequences and the coefficient table that decomposes
// generalized hyperharmonic numbers into ordinary harmonic numbers.

#include <cstdint>
#include <map>
#include <utility>

#include "hhsum/exact.hpp"

namespace hhsum {

/// H_n^(p) = sum_{j<=n} j^{-p} for p >= 1; for p <= 0 the power sum
/// 1^{-p} + ... + n^{-p} (through Faulhaber). H_0 = 0.
BigRational harmonic(std::uint64_t n, int p);

/// sum_{j<=n} (-1)^{j-1} / j^m, m >= 1.
BigRational harmonic_alt(std::uint64_t n, int m);

/// H_n^(p,r) from the iterated partial sums H_n^(p,r) = sum_{j<=n} H_j^(p,r-1),
/// H_n^(p,1) = H_n^(p). Memoized per (p, r).
BigRational hyperharmonic(std::uint64_t n, int p, int r);

/// Triangular table a(r,m,j), 0 <= m <= r-1, 0 <= j <= r-1-m, with
/// H_n^(p,r) = sum_{m,j} a(r,m,j) n^j H_n^(p-m).
class CoeffTable {
public:
    explicit CoeffTable(int order);

    int order() const { return order_; }
    /// Throws std::out_of_range outside the triangular domain.
    const BigRational& at(int m, int j) const;
    bool contains(int m, int j) const { return m >= 0 && j >= 0 && m + j <= order_ - 1; }
    const std::map<std::pair<int, int>, BigRational>& entries() const { return entries_; }

    /// Next order from this one through the three recurrences.
    CoeffTable next() const;

private:
    CoeffTable() = default;

    int order_ = 0;
    std::map<std::pair<int, int>, BigRational> entries_;
};

/// Table of order r >= 1, built bottom-up from a(1,0,0) = 1. Cached.
const CoeffTable& coeff_table(int r);

/// sum_{m,j} a(r,m,j) n^j H_n^(p-m); equal to hyperharmonic(n, p, r).
BigRational hyperharmonic_via_coeffs(std::uint64_t n, int p, int r);

}  // namespace hhsum
