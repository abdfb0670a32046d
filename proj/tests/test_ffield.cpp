#include <catch2/catch_amalgamated.hpp>

#include "hyperalg/ffield.hpp"

using namespace hyperalg;

namespace {

// independent oracle: Pascal's triangle mod p, with the reflection
// binom(-n, k) = (-1)^k binom(n+k-1, k) for negative upper arguments
int pascal_binom(long long n, long long k, int p) {
  if (k < 0) throw std::invalid_argument("bad k");
  if (n < 0) {
    const int v = pascal_binom(-n + k - 1, k, p);
    return k % 2 ? (p - v) % p : v;
  }
  if (k > n) return 0;
  std::vector<std::vector<int>> tri(static_cast<size_t>(n + 1));
  for (long long i = 0; i <= n; ++i) {
    tri[static_cast<size_t>(i)].assign(static_cast<size_t>(i + 1), 1);
    for (long long j = 1; j < i; ++j)
      tri[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
           tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]) %
          p;
  }
  return tri[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

}  // namespace

TEST_CASE("binomials with negative upper argument") {
  CHECK(binom_mod(-1, 1, 3) == 2);
  CHECK(binom_mod(-1, 1, 3) == pascal_binom(-1, 1, 3));
  CHECK(binom_mod(6, 1, 3) == 0);
  CHECK(binom_mod(4, 2, 2) == 0);
  CHECK(binom_mod(7, 0, 5) == 1);
  CHECK(binom_mod(-5, 3, 7) == pascal_binom(-5, 3, 7));
}

TEST_CASE("binomials agree with the Pascal oracle") {
  for (int p : {2, 3, 5})
    for (int k = 0; k < p * p; ++k)
      for (int n = -2 * p * p; n < 2 * p * p; ++n)
        REQUIRE(binom_mod(n, k, p) == pascal_binom(n, k, p));
}

TEST_CASE("period reduction is sound") {
  for (int p : {2, 3, 5})
    for (int k = 0; k < p * p; ++k) {
      long long period = 1;
      while (period <= k) period *= p;
      for (int n = 0; n < 2 * p * p; ++n)
        REQUIRE(binom_mod(n + period, k, p) == binom_mod(n, k, p));
    }
}

TEST_CASE("carry vanishing for divided-power recombination") {
  const std::pair<int, int> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                       {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}};
  for (auto [p, r] : cases) {
    int pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    if (pr > 27) continue;
    for (int a = 0; a < pr; ++a)
      for (int b = 0; b < pr; ++b)
        if (a + b >= pr) REQUIRE(binom_mod(a + b, a, p) == 0);
  }
}

TEST_CASE("field inverses") {
  CHECK(inv(Scalar(2, 3)) == Scalar(2, 3));
  CHECK(inv(Scalar(1, 7)) == Scalar(1, 7));
  // exhaustive-search oracle
  for (int p : {3, 5, 7})
    for (int a = 1; a < p; ++a) {
      int found = -1;
      for (int b = 1; b < p; ++b)
        if (a * b % p == 1) found = b;
      CHECK(inv(Scalar(a, p)).v == found);
    }
  CHECK(inv(Scalar(3, 5)) == Scalar(2, 5));
}

TEST_CASE("field axioms, exhaustively") {
  for (int p : {2, 3, 5, 7})
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        Scalar x(a, p), y(b, p);
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        for (int c = 0; c < p; ++c) {
          Scalar z(c, p);
          REQUIRE((x + y) + z == x + (y + z));
          REQUIRE((x * y) * z == x * (y * z));
          REQUIRE(x * (y + z) == x * y + x * z);
        }
      }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(binom_mod(3, -1, 5), std::invalid_argument);
  CHECK_THROWS_AS(inv(Scalar(0, 5)), std::domain_error);
  CHECK_THROWS_AS(Scalar(1, 3) + Scalar(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(2, 3) * Scalar(2, 7), std::invalid_argument);
}
