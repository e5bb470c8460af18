#pragma once

#include <stdexcept>

#include "pgx/bigint.hpp"

namespace pgx {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Gaussian binomial [n over m]_p: the number of subgroups of order p^m in an
// elementary abelian group of order p^n.
//
// Boundary convention: 0 for m < 0 or m > n, 1 for m = 0. This is the
// convention the Pascal-type recurrence needs; see README for the note on
// the degenerate boundary case.
inline BigInt gauss_binomial(int n, int m, int p) {
  if (!is_prime(p)) throw std::invalid_argument("gauss_binomial: p must be prime");
  if (m < 0 || m > n) return 0;
  if (m == 0) return 1;
  // Full numerator first, then factor-by-factor exact division. Dividing
  // after the complete numerator product keeps every intermediate integral,
  // and the remainder check turns any slip into a hard error instead of a
  // silently truncated count.
  BigInt acc = 1;
  for (int i = 0; i < m; ++i) acc *= big_pow(p, n - i) - 1;
  for (int i = 1; i <= m; ++i) {
    BigInt d = big_pow(p, i) - 1;
    if (acc % d != 0) throw std::logic_error("gauss_binomial: non-exact division");
    acc /= d;
  }
  return acc;
}

// Upper bound for the number of non-cyclic subgroups of a group of order
// p^n: sum of [n over k]_p for k = 2..n. Attained exactly by C_p^n.
inline BigInt elementary_abelian_delta_bound(int n, int p) {
  BigInt total = 0;
  for (int k = 2; k <= n; ++k) total += gauss_binomial(n, k, p);
  return total;
}

}  // namespace pgx
