#include <catch2/catch_amalgamated.hpp>

#include "pgx/gaussian.hpp"

using pgx::BigInt;
using pgx::elementary_abelian_delta_bound;
using pgx::gauss_binomial;

TEST_CASE("gauss_binomial small values") {
  CHECK(gauss_binomial(3, 1, 2) == 7);
  CHECK(gauss_binomial(5, 2, 2) == 155);
  CHECK(gauss_binomial(4, 1, 3) == 40);
  CHECK(gauss_binomial(4, 3, 3) == 40);
  CHECK(gauss_binomial(2, 1, 3) == 4);
  CHECK(gauss_binomial(3, 2, 3) == 13);
}

TEST_CASE("gauss_binomial boundary convention") {
  CHECK(gauss_binomial(4, 0, 2) == 1);
  CHECK(gauss_binomial(0, 0, 2) == 1);
  CHECK(gauss_binomial(4, 4, 2) == 1);
  CHECK(gauss_binomial(4, 5, 2) == 0);
  CHECK(gauss_binomial(4, -1, 2) == 0);
  CHECK(gauss_binomial(-1, 0, 2) == 0);  // out-of-range n dominates the m == 0 rule
}

TEST_CASE("gauss_binomial rejects non-primes") {
  CHECK_THROWS_AS(gauss_binomial(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(gauss_binomial(3, 1, 1), std::invalid_argument);
}

TEST_CASE("Pascal-type recurrence holds exactly") {
  for (int p : {2, 3, 5}) {
    for (int n = 0; n <= 11; ++n) {
      for (int m = 0; m <= n + 1; ++m) {
        BigInt lhs = gauss_binomial(n + 1, m, p);
        BigInt rhs = gauss_binomial(n, m, p) + pgx::big_pow(p, n - m + 1) * gauss_binomial(n, m - 1, p);
        INFO("p=" << p << " n=" << n << " m=" << m);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("symmetry [n,m] == [n,n-m]") {
  for (int p : {2, 3, 5}) {
    for (int n = 0; n <= 12; ++n) {
      for (int m = 0; m <= n; ++m) {
        CHECK(gauss_binomial(n, m, p) == gauss_binomial(n, n - m, p));
      }
    }
  }
}

TEST_CASE("delta bound for elementary abelian groups") {
  CHECK(elementary_abelian_delta_bound(3, 2) == 8);    // [3,2]_2 + [3,3]_2 = 7 + 1
  CHECK(elementary_abelian_delta_bound(3, 3) == 14);   // 13 + 1
  CHECK(elementary_abelian_delta_bound(1, 2) == 0);
  CHECK(elementary_abelian_delta_bound(0, 5) == 0);
  CHECK(elementary_abelian_delta_bound(2, 2) == 1);    // just the Klein four group itself
}

TEST_CASE("values exceed 64 bits without overflow") {
  BigInt v = gauss_binomial(12, 6, 5);
  CHECK(v > BigInt("18446744073709551615"));
  CHECK(v % 1 == 0);
}
