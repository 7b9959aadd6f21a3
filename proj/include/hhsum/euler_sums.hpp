#pragma once

// Linear and quadratic (alternating) Euler sums
//   S_{p,q}^{i,o}     = sum_n o(n) X_n^(p) / n^q,   X = H (i = +) or Hbar (i = -)
//   S_{p1,p2,q}^{o}   = sum_n o(n) H_n^(p1) H_n^(p2) / n^q
// with o(n) = 1 (o = +) or (-1)^{n-1} (o = -).

#include <cstdint>
#include <utility>

#include "hhsum/real.hpp"

namespace hhsum {

enum class Sign { Plus, Minus };

/// Throws DivergenceError unless q >= 2, or outer = Minus and q >= 1.
Approx linear_euler(int p, int q, Sign inner, Sign outer);

/// Same convergence rule as linear_euler. Symmetric in (p1, p2).
Approx quadratic_euler(int p1, int p2, int q, Sign outer);

/// (2 S_{1,m}^{+,+}, (m+2) zeta(m+1) - sum_{n=1}^{m-2} zeta(m-n) zeta(n+1)), m >= 2.
std::pair<Approx, Approx> euler_reduction_check(int m);

/// Non-alternating sums truncated at an explicit N (no caching).
Approx linear_euler_at(int p, int q, std::int64_t N);
Approx quadratic_euler_at(int p1, int p2, int q, std::int64_t N);

}  // namespace hhsum
