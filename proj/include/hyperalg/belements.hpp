#pragma once

#include <vector>

#include "hyperalg/hyperalgebra.hpp"

namespace hyperalg {

// A pair (a, j) from the index set P, with a canonicalized into [0, p) and
// j stored as the integer 2j so the half-integers at p = 2 stay exact.
// For odd p: twoJ even in [0, p-1].  For p = 2 the three members are
// (0, 1/2), (1, 0), (1, 1), i.e. twoJ in {1}, {0, 2}.
struct Pair {
  int a = 0;
  int twoJ = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

enum class PairClass { A, B, C, D };

inline bool pair_valid(int p, const Pair& q) {
  if (q.a < 0 || q.a >= p) return false;
  if (p == 2)
    return (q.a == 0 && q.twoJ == 1) || (q.a == 1 && (q.twoJ == 0 || q.twoJ == 2));
  return q.twoJ >= 0 && q.twoJ <= p - 1 && q.twoJ % 2 == 0;
}

inline void require_pair(int p, const Pair& q) {
  if (!pair_valid(p, q))
    throw std::invalid_argument("pair (" + std::to_string(q.a) + ", " +
                                std::to_string(q.twoJ) + "/2) not in P for p=" +
                                std::to_string(p));
}

inline Pair make_pair_aj(int p, long long a, int twoJ) {
  Pair q{static_cast<int>(((a % p) + p) % p), twoJ};
  require_pair(p, q);
  return q;
}

// Conditions (A)-(D) partition P.  At p = 2 the assignments are fixed:
// (0, 1/2), (1, 0), (1, 1) satisfy (B), (C), (D) respectively.
inline PairClass classify(int p, const Pair& q) {
  require_pair(p, q);
  if (p == 2) {
    if (q.a == 0) return PairClass::B;
    return q.twoJ == 0 ? PairClass::C : PairClass::D;
  }
  if (q.a % 2 == 0)
    return q.twoJ >= p - q.a + 1 ? PairClass::A : PairClass::B;
  return q.twoJ <= q.a - 1 ? PairClass::C : PairClass::D;
}

// Condition (E): j = 0 for odd p; a odd for p = 2.
inline bool satisfies_e(int p, const Pair& q) {
  require_pair(p, q);
  return p == 2 ? q.a % 2 == 1 : q.twoJ == 0;
}

namespace detail {
inline int half_of(int two, const char* what) {
  if (two < 0 || two % 2)
    throw std::logic_error(std::string(what) + ": table entry not a nonnegative integer");
  return two / 2;
}
}  // namespace detail

// The leading-index table, one row per condition.  All entries are
// evaluated in the doubled form so that p = 2 stays integral.
inline int n_bound(int p, const Pair& q, int eps) {
  require_pair(p, q);
  int two = 0;
  switch (classify(p, q)) {
    case PairClass::A: two = eps == 0 ? (p - q.a - 1) + q.twoJ : (3 * p - q.a - 1) - q.twoJ; break;
    case PairClass::B: two = eps == 0 ? (p - q.a - 1) - q.twoJ : (p - q.a - 1) + q.twoJ; break;
    case PairClass::C: two = eps == 0 ? (2 * p - q.a - 1) - q.twoJ : (2 * p - q.a - 1) + q.twoJ; break;
    case PairClass::D: two = eps == 0 ? q.twoJ - (q.a + 1) : (2 * p - q.a - 1) - q.twoJ; break;
  }
  return detail::half_of(two, "n_bound");
}

// The tilde columns come from the same table.  (For odd p this agrees with
// n_bound at (-a, j); at p = 2 only the table form is correct.)
inline int n_tilde_bound(int p, const Pair& q, int eps) {
  require_pair(p, q);
  int two = 0;
  switch (classify(p, q)) {
    case PairClass::A: two = eps == 0 ? (q.a - p - 1) + q.twoJ : (p + q.a - 1) - q.twoJ; break;
    case PairClass::B: two = eps == 0 ? (p + q.a - 1) - q.twoJ : (p + q.a - 1) + q.twoJ; break;
    case PairClass::C: two = eps == 0 ? (q.a - 1) - q.twoJ : (q.a - 1) + q.twoJ; break;
    case PairClass::D: two = eps == 0 ? (q.a - 1) + q.twoJ : (2 * p + q.a - 1) - q.twoJ; break;
  }
  return detail::half_of(two, "n_tilde_bound");
}

// iota maps a pair to the integer b in (-p, p) carrying its weight digit.
inline int iota(int p, const Pair& q) {
  PairClass c = classify(p, q);
  return (c == PairClass::A || c == PairClass::C) ? q.a - p : q.a;
}

inline Pair negate_pair(int p, const Pair& q) {
  require_pair(p, q);
  return Pair{((-q.a % p) + p) % p, q.twoJ};
}

namespace detail {
// gamma_i evaluated at an arbitrary integer a.  At p = 2 the defining
// expression (4j^2 - (a+1+2i)^2)/4 is an integer on P and is reduced only
// after the division; for odd p everything happens in F_p.
inline Scalar gamma_at(int p, long long a, int twoJ, long long i) {
  if (p == 2) {
    long long x = a + 1 + 2 * i;
    long long num = static_cast<long long>(twoJ) * twoJ - x * x;
    if (num % 4) throw std::logic_error("gamma: non-integral value");
    return Scalar(num / 4, 2);
  }
  long long inv2 = inv_mod(2, p);
  long long j = twoJ % p * inv2 % p;
  long long h = ((a + 1) % p + p) % p * inv2 % p;
  return Scalar(j * j - (h + i) * (h + i), p);
}
}  // namespace detail

inline Scalar gamma_aj(int p, const Pair& q, long long i) {
  require_pair(p, q);
  return detail::gamma_at(p, q.a, q.twoJ, i);
}

inline Scalar gamma_tilde_aj(int p, const Pair& q, long long i) {
  require_pair(p, q);
  return detail::gamma_at(p, -static_cast<long long>(q.a), q.twoJ, i);
}

inline Scalar beta_aj(int p, const Pair& q, int n) {
  Scalar acc(1, p);
  for (int i = 0; i < n; ++i) acc = acc * gamma_aj(p, q, i);
  return acc;
}

inline Scalar beta_tilde_aj(int p, const Pair& q, int n) {
  Scalar acc(1, p);
  for (int i = 0; i < n; ++i) acc = acc * gamma_tilde_aj(p, q, i);
  return acc;
}

// s(a, j), defined for pairs of class (A) or (C) only.
inline int s_val(int p, const Pair& q) {
  PairClass c = classify(p, q);
  if (c != PairClass::A && c != PairClass::C)
    throw std::invalid_argument("s_val: pair is not of class (A) or (C)");
  if (p == 2) return 1;
  return q.a % 2 == 0 ? (p - q.a + 1) / 2 : (p - q.a) / 2;
}

namespace detail {
inline std::vector<int> polymul(const std::vector<int>& f, const std::vector<int>& g, int p) {
  std::vector<int> out(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      out[i + j] = static_cast<int>((out[i + j] + static_cast<long long>(f[i]) * g[j]) % p);
  return out;
}
}  // namespace detail

// Dense coefficient list (ascending degree) of psi_j^(eps) over F_p, odd p:
//   psi_0^(0) = psi_0^(1) = prod_{i in F_p^x} (x - i^2)
//   psi_s^(0) = 2x(x + s^2) prod_{i not in {0, s, p-s}} (x - i^2)
//   psi_s^(1) =  x(x - s^2) prod_{i not in {0, s, p-s}} (x - i^2)
inline std::vector<int> psi_coeffs(int p, int twoJ, int eps) {
  if (p == 2) throw std::invalid_argument("psi_coeffs: p = 2 has no psi polynomials");
  if (twoJ < 0 || twoJ > p - 1 || twoJ % 2)
    throw std::invalid_argument("psi_coeffs: bad twoJ");
  const int s = twoJ / 2;
  if (s == 0) {
    std::vector<int> f{1};
    for (int i = 1; i < p; ++i)
      f = detail::polymul(f, {static_cast<int>(((-i * i) % p + p) % p), 1}, p);
    return f;
  }
  std::vector<int> base{1};
  for (int i = 1; i < p; ++i) {
    if (i == s || i == p - s) continue;
    base = detail::polymul(base, {static_cast<int>(((-i * i) % p + p) % p), 1}, p);
  }
  std::vector<int> head;
  if (eps == 0)
    head = detail::polymul({0, 2}, {s * s % p, 1}, p);
  else
    head = detail::polymul({0, 1}, {((-s * s) % p + p) % p, 1}, p);
  return detail::polymul(head, base, p);
}

// B^(eps)(a, j) in U_1.  Odd p: mu_a * psi_j^(eps)(mu_a Y X + ((a+1)/2)^2),
// the polynomial evaluated at a commutative element of A_1.  p = 2: the four
// elements are tabulated.
inline Element b1(int p, int eps, const Pair& q) {
  require_pair(p, q);
  if (eps != 0 && eps != 1) throw std::invalid_argument("b1: eps must be 0 or 1");
  AlgebraCtx ctx = make_ctx(p, 1);
  if (p == 2) {
    Element yx = mul(gen_y(ctx, 1), gen_x(ctx, 1));
    if (q.a == 0) return eps == 0 ? gen_mu(ctx, 0) : mul(gen_mu(ctx, 0), yx);
    Element m1yx = mul(gen_mu(ctx, 1), yx);
    return q.twoJ == 0 ? m1yx : add(m1yx, gen_mu(ctx, 1));
  }
  long long inv2 = inv_mod(2, p);
  long long half = (q.a + 1) % p * inv2 % p;
  Element arg = add(mul(gen_mu(ctx, q.a), mul(gen_y(ctx, 1), gen_x(ctx, 1))),
                    scale(identity(ctx), half * half % p));
  std::vector<int> psi = psi_coeffs(p, q.twoJ, eps);
  Element acc(ctx);
  for (auto it = psi.rbegin(); it != psi.rend(); ++it)
    acc = add(mul(acc, arg), scale(identity(ctx), *it));
  return mul(gen_mu(ctx, q.a), acc);
}

// The expansion B^(eps)(a,j) = mu_a sum_m c_m Y^m X^m = mu_a sum_m c~_m X^m Y^m
// with ordinary powers Y^m = m! Y^(m).  The c side reads off directly since
// mu_a Y^m X^m = (m!)^2 Y^(m) mu_{a+2m} X^(m) is a single basis monomial;
// the c~ side is recovered by downward triangular elimination against the
// normal forms of mu_a X^m Y^m.
struct BCoeffs {
  std::map<int, int> c, c_tilde;
};

inline BCoeffs b_coeffs(int p, int eps, const Pair& q) {
  AlgebraCtx ctx = make_ctx(p, 1);
  Element B = b1(p, eps, q);
  BCoeffs out;
  for (int m = 0; m < p; ++m) {
    Monomial key{m, (q.a + 2 * m) % p, m};
    if (int v = B.coeff(key)) {
      long long f = factorial_mod(m, p);
      out.c[m] = static_cast<int>(v * inv_mod(f * f % p, p) % p);
    }
  }
  Element residual = B;
  Element x1 = gen_x(ctx, 1), y1 = gen_y(ctx, 1);
  for (int m = p - 1; m >= 0; --m) {
    Monomial key{m, (q.a + 2 * m) % p, m};
    int num = residual.coeff(key);
    if (!num) continue;
    Element nf = mul(gen_mu(ctx, q.a), mul(elem_pow(x1, m), elem_pow(y1, m)));
    int den = nf.coeff(key);
    int ct = static_cast<int>(static_cast<long long>(num) * inv_mod(den, p) % p);
    out.c_tilde[m] = ct;
    residual = sub(residual, scale(nf, ct));
  }
  if (!residual.is_zero())
    throw std::logic_error("b_coeffs: X^m Y^m expansion did not terminate");
  return out;
}

using TupleAJ = std::vector<Pair>;
using EpsVec = std::vector<int>;

inline void require_tuple(int p, const TupleAJ& t) {
  if (t.empty()) throw std::invalid_argument("empty pair tuple");
  for (const Pair& q : t) require_pair(p, q);
}

// The recursion step: interleave Fr'(z) into the rank-1 expansion of
// B^(eps)(a, j).  For classes (B)/(D) this is Fr'(z) B^(eps)(a, j); for
// (A)/(C) it is mu_a sum_m c_m Y^m X^{m-s} Fr'(z) X^s with s = s(a, j),
// which needs n^(eps)(a, j) >= s(a, j) -- asserted at runtime.
inline Element z_op(int eps, const Pair& q, const Element& z) {
  const AlgebraCtx& src = z.ctx();
  const int p = src.p;
  require_pair(p, q);
  AlgebraCtx big = make_ctx(p, src.r + 1);
  PairClass cls = classify(p, q);
  if (cls == PairClass::B || cls == PairClass::D)
    return mul(fr_prime(z), embed(b1(p, eps, q), big.r));
  const int s = s_val(p, q);
  BCoeffs bc = b_coeffs(p, eps, q);
  for (const auto& [m, cm] : bc.c)
    if (m < s)
      throw std::logic_error("z_op: expansion index below s(a,j); "
                             "leading-index inequality violated");
  Element x1 = gen_x(big, 1), y1 = gen_y(big, 1);
  Element fz = fr_prime(z);
  Element xs = elem_pow(x1, s);
  Element acc(big);
  for (const auto& [m, cm] : bc.c) {
    Element t = mul(elem_pow(y1, m), elem_pow(x1, m - s));
    t = mul(t, mul(fz, xs));
    acc = add(acc, scale(t, cm));
  }
  return mul(embed(gen_mu(make_ctx(p, 1), q.a), big.r), acc);
}

// B^(eps)(a, j) for an r-tuple: fold the interleaving step from the last
// index inward; the base case is the rank-1 element.
inline Element b_tuple(int p, const EpsVec& eps, const TupleAJ& tuple) {
  require_tuple(p, tuple);
  if (eps.size() != tuple.size())
    throw std::invalid_argument("b_tuple: eps/tuple length mismatch");
  Element acc = b1(p, eps.back(), tuple.back());
  for (size_t i = tuple.size() - 1; i-- > 0;)
    acc = z_op(eps[i], tuple[i], acc);
  return acc;
}

// u^(i,t): the |t|-th ordinary power of X^(p^i) (t >= 0) or Y^(p^i) (t < 0).
inline Element u_pow(const AlgebraCtx& ctx, int i, int t) {
  if (i < 0 || i >= ctx.r) throw std::invalid_argument("u_pow: index out of range");
  long long pi = 1;
  for (int k = 0; k < i; ++k) pi *= ctx.p;
  Element g = t >= 0 ? gen_x(ctx, pi) : gen_y(ctx, pi);
  return elem_pow(g, t >= 0 ? t : -t);
}

inline Element b_shifted(int p, const EpsVec& eps, const TupleAJ& tuple,
                         const std::vector<int>& t) {
  if (t.size() != tuple.size())
    throw std::invalid_argument("b_shifted: shift length mismatch");
  Element e = b_tuple(p, eps, tuple);
  for (size_t i = tuple.size(); i-- > 0;)
    e = mul(u_pow(e.ctx(), static_cast<int>(i), t[i]), e);
  return e;
}

// X_r(a, j): the sign vectors with eps_i = 0 wherever (a_i, j_i) satisfies
// (E).  Enumerated lexicographically.
inline std::vector<EpsVec> x_set(int p, const TupleAJ& tuple) {
  require_tuple(p, tuple);
  const int r = static_cast<int>(tuple.size());
  std::vector<EpsVec> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    EpsVec eps(r);
    bool ok = true;
    for (int i = 0; i < r; ++i) {
      eps[i] = (mask >> (r - 1 - i)) & 1;
      if (eps[i] && satisfies_e(p, tuple[i])) ok = false;
    }
    if (ok) out.push_back(std::move(eps));
  }
  return out;
}

struct ThetaEntry {
  EpsVec theta;
  std::vector<int> t;
};

// Theta_r((a,j), eps): theta in X_r above eps, with t_i ranging over
// [-n~^(theta_i+1), n^(theta_i+1)] for each i.  Lexicographic in (theta, t).
inline std::vector<ThetaEntry> theta_set(int p, const TupleAJ& tuple, const EpsVec& eps) {
  require_tuple(p, tuple);
  const int r = static_cast<int>(tuple.size());
  if (static_cast<int>(eps.size()) != r)
    throw std::invalid_argument("theta_set: eps length mismatch");
  std::vector<EpsVec> xs = x_set(p, tuple);
  bool eps_ok = false;
  for (const EpsVec& th : xs)
    if (th == eps) eps_ok = true;
  if (!eps_ok) throw std::invalid_argument("theta_set: eps not in X_r");
  std::vector<ThetaEntry> out;
  for (const EpsVec& th : xs) {
    bool above = true;
    for (int i = 0; i < r; ++i)
      if (eps[i] > th[i]) above = false;
    if (!above) continue;
    std::vector<int> lo(r), hi(r), t(r);
    for (int i = 0; i < r; ++i) {
      const int flip = 1 - th[i];
      lo[i] = -n_tilde_bound(p, tuple[i], flip);
      hi[i] = n_bound(p, tuple[i], flip);
      t[i] = lo[i];
    }
    while (true) {
      out.push_back(ThetaEntry{th, t});
      int i = r - 1;
      while (i >= 0 && t[i] == hi[i]) {
        t[i] = lo[i];
        --i;
      }
      if (i < 0) break;
      ++t[i];
    }
  }
  return out;
}

// h(nu, i) = binom(H + 2 p^i nu, 2 p^i nu) + binom(H + 2 p^i nu - 1, 2 p^i nu),
// expanded over the weight idempotents of U_r.
inline Element h_elem(const AlgebraCtx& ctx, int nu, int i) {
  if (ctx.p == 2) throw std::invalid_argument("h_elem: defined for odd p only");
  if (nu < 1 || nu > (ctx.p - 1) / 2) throw std::invalid_argument("h_elem: bad nu");
  if (i < 0 || i >= ctx.r) throw std::invalid_argument("h_elem: bad i");
  long long pi = 1;
  for (int k = 0; k < i; ++k) pi *= ctx.p;
  const long long two_nu = 2 * pi * nu;
  Element out(ctx);
  for (int a = 0; a < ctx.pr; ++a)
    out.add_term(Monomial{0, a, 0},
                 binom_mod(a + two_nu, two_nu, ctx.p) +
                     binom_mod(a + two_nu - 1, two_nu, ctx.p));
  return out;
}

inline std::vector<Pair> enumerate_p_set(int p) {
  if (p == 2) return {Pair{0, 1}, Pair{1, 0}, Pair{1, 2}};
  std::vector<Pair> out;
  for (int a = 0; a < p; ++a)
    for (int twoJ = 0; twoJ <= p - 1; twoJ += 2) out.push_back(Pair{a, twoJ});
  return out;
}

inline std::vector<TupleAJ> enumerate_tuples(int p, int r) {
  std::vector<Pair> P = enumerate_p_set(p);
  std::vector<TupleAJ> out{{}};
  for (int i = 0; i < r; ++i) {
    std::vector<TupleAJ> next;
    for (const TupleAJ& t : out)
      for (const Pair& q : P) {
        TupleAJ t2 = t;
        t2.push_back(q);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace hyperalg
