#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperalg {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int mod_pow(long long base, long long exp, int p) {
  long long b = ((base % p) + p) % p, acc = 1;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<int>(acc);
}

// Inverse modulo a prime; zero input is a division-by-zero error.
inline int inv_mod(long long a, int p) {
  a = ((a % p) + p) % p;
  if (a == 0)
    throw std::domain_error("inv_mod: division by zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

namespace detail {

// binom(a, b) mod p for digits 0 <= a, b < p.
inline int binom_digit(int a, int b, int p) {
  if (b > a) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < b; ++i) {
    num = num * (a - i) % p;
    den = den * (i + 1) % p;
  }
  return static_cast<int>(num * mod_pow(den, p - 2, p) % p);
}

}  // namespace detail

// binom(n, k) mod p for any integer n and k >= 0.  n is reduced modulo the
// least power p^M > k, which keeps the value: binom(n + p^M, k) = binom(n, k)
// (mod p) whenever p^M > k, by Vandermonde with binom(p^M, j) = 0 for
// 0 < j < p^M.  Lucas' theorem then applies digit-wise.
inline int binom_mod(long long n, long long k, int p) {
  if (k < 0) throw std::invalid_argument("binom_mod: negative lower argument");
  if (k == 0) return 1;
  long long period = 1;
  while (period <= k) period *= p;
  long long a = ((n % period) + period) % period;
  long long b = k;
  long long res = 1;
  while (b > 0) {
    const int da = static_cast<int>(a % p), db = static_cast<int>(b % p);
    if (db > da) return 0;
    res = res * detail::binom_digit(da, db, p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<int>(res);
}

inline long long factorial_mod(int n, int p) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f = f * i % p;
  return f;
}

// A residue in F_p.  Scalars carry their modulus; combining scalars over
// different moduli is a programming error detected at operation time.
struct Scalar {
  int v = 0;
  int p = 0;

  Scalar() = default;
  Scalar(long long value, int modulus) : p(modulus) {
    if (p < 2) throw std::invalid_argument("Scalar: bad modulus");
    v = static_cast<int>(((value % p) + p) % p);
  }

  bool is_zero() const { return v == 0; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.p == y.p && x.v == y.v;
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    require_same(x, y);
    return Scalar(static_cast<long long>(x.v) + y.v, x.p);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    require_same(x, y);
    return Scalar(static_cast<long long>(x.v) - y.v, x.p);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    require_same(x, y);
    return Scalar(static_cast<long long>(x.v) * y.v, x.p);
  }

  static void require_same(const Scalar& x, const Scalar& y) {
    if (x.p != y.p)
      throw std::invalid_argument("Scalar: mixed moduli " + std::to_string(x.p) +
                                  " and " + std::to_string(y.p));
  }
};

inline Scalar inv(const Scalar& s) { return Scalar(inv_mod(s.v, s.p), s.p); }

inline Scalar binom_mod_p(long long n, long long k, int p) {
  return Scalar(binom_mod(n, k, p), p);
}

}  // namespace hyperalg
