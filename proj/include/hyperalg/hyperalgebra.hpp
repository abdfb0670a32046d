#pragma once

#include <cassert>
#include <cctype>
#include <compare>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperalg/ffield.hpp"

namespace hyperalg {

// The finite-dimensional algebra U_r attached to SL_2 in characteristic p.
// It has dimension p^{3r} with basis monomials Y^(m) mu_a X^(m') for
// 0 <= m, a, m' < p^r.  The context is immutable; contexts with equal (p, r)
// are interchangeable.
struct AlgebraCtx {
  int p = 0;
  int r = 0;
  long long pr = 0;   // p^r
  long long dim = 0;  // p^{3r}

  // binom(n, k) mod p for n in [-pr, 2pr), k in [0, pr); exactly the range
  // the product expansion needs.
  std::shared_ptr<const std::vector<uint8_t>> binom_table;

  int binom(long long n, long long k) const {
    if (binom_table && k >= 0 && k < pr && n >= -pr && n < 2 * pr)
      return (*binom_table)[static_cast<size_t>((n + pr) * pr + k)];
    return binom_mod(n, k, p);
  }

  friend bool operator==(const AlgebraCtx& x, const AlgebraCtx& y) {
    return x.p == y.p && x.r == y.r;
  }
};

inline AlgebraCtx make_ctx(int p, int r) {
  if (!is_prime(p)) throw std::invalid_argument("make_ctx: p must be prime");
  if (r < 1) throw std::invalid_argument("make_ctx: r must be positive");
  AlgebraCtx ctx;
  ctx.p = p;
  ctx.r = r;
  ctx.pr = 1;
  for (int i = 0; i < r; ++i) {
    ctx.pr *= p;
    if (ctx.pr > (1 << 20))
      throw std::invalid_argument("make_ctx: p^r out of supported range");
  }
  ctx.dim = ctx.pr * ctx.pr * ctx.pr;
  if (ctx.pr <= 256) {
    auto tbl = std::make_shared<std::vector<uint8_t>>(
        static_cast<size_t>(3 * ctx.pr * ctx.pr));
    for (long long n = -ctx.pr; n < 2 * ctx.pr; ++n)
      for (long long k = 0; k < ctx.pr; ++k)
        (*tbl)[static_cast<size_t>((n + ctx.pr) * ctx.pr + k)] =
            static_cast<uint8_t>(binom_mod(n, k, p));
    ctx.binom_table = std::move(tbl);
  }
  return ctx;
}

// Y^(m) mu_a X^(mp).  Degree is mp - m; left weight is (a - 2m) mod p^r.
// The ordering (m, a, mp) is the fixed monomial order used for all linear
// algebra over the monomial basis.
struct Monomial {
  int m = 0;
  int a = 0;
  int mp = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline long long monomial_index(const AlgebraCtx& ctx, const Monomial& M) {
  return (static_cast<long long>(M.m) * ctx.pr + M.a) * ctx.pr + M.mp;
}

inline Monomial monomial_of_index(const AlgebraCtx& ctx, long long idx) {
  Monomial M;
  M.mp = static_cast<int>(idx % ctx.pr);
  M.a = static_cast<int>((idx / ctx.pr) % ctx.pr);
  M.m = static_cast<int>(idx / (ctx.pr * ctx.pr));
  return M;
}

// Test hook: when enabled, the structure constant of the product
// (mu_0 X^(1)) * (Y^(1) mu_0) is perturbed by an extra +mu_0.  The
// verification suites must detect a corrupted multiplication table.
struct FaultInjection {
  inline static bool enabled = false;
};

struct FaultInjectionGuard {
  FaultInjectionGuard() { FaultInjection::enabled = true; }
  ~FaultInjectionGuard() { FaultInjection::enabled = false; }
  FaultInjectionGuard(const FaultInjectionGuard&) = delete;
};

// One basis-monomial product, emitted term by term:
//   (Y^(m1) mu_a X^(n1)) (Y^(m2) mu_b X^(n2)).
// The Kostant identity expands
//   X^(n1) Y^(m2) = sum_j Y^(m2-j) binom(H - n1 - m2 + 2j, j) X^(n1-j);
// pushing the mu's together annihilates the product unless
// a + 2 m2 = b + 2 n1 (mod p^r), and the toral factor evaluates against the
// mu on its right to the scalar binom(b + n1 - m2, j).  Divided powers
// recombine with binomial coefficients; out-of-range exponents are dropped
// since their coefficient vanishes by the Kummer carry rule.
template <class Emit>
inline void mul_mono(const AlgebraCtx& ctx, const Monomial& M1,
                     const Monomial& M2, Emit&& emit) {
  const long long pr = ctx.pr;
  long long delta = (M1.a + 2LL * M2.m - M2.a - 2LL * M1.mp) % pr;
  if (delta < 0) delta += pr;
  if (delta == 0) {
    const long long top = M2.a + M1.mp - M2.m;
    const int jmax = M1.mp < M2.m ? M1.mp : M2.m;
    for (int j = 0; j <= jmax; ++j) {
      const int my = M1.m + M2.m - j;
      const int nx = M1.mp + M2.mp - j;
      if (my >= pr || nx >= pr) {
        assert(ctx.binom(my, M1.m) * ctx.binom(nx, M2.mp) % ctx.p == 0);
        continue;
      }
      long long c = ctx.binom(top, j);
      if (!c) continue;
      c = c * ctx.binom(my, M1.m) % ctx.p;
      if (!c) continue;
      c = c * ctx.binom(nx, M2.mp) % ctx.p;
      if (!c) continue;
      long long aa = (M2.a + 2LL * (M1.mp - j)) % pr;
      emit(Monomial{my, static_cast<int>(aa), nx}, static_cast<int>(c));
    }
  }
  if (FaultInjection::enabled && M1 == Monomial{0, 0, 1} && M2 == Monomial{1, 0, 0})
    emit(Monomial{0, 0, 0}, 1);
}

// A sparse exact linear combination of basis monomials.  No zero
// coefficients are stored and equality is term-map equality.
class Element {
 public:
  Element() = default;
  explicit Element(AlgebraCtx ctx) : ctx_(std::move(ctx)) {}

  const AlgebraCtx& ctx() const { return ctx_; }
  const std::map<Monomial, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int coeff(const Monomial& M) const {
    auto it = terms_.find(M);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Monomial& M, long long c) {
    c %= ctx_.p;
    if (c < 0) c += ctx_.p;
    if (!c) return;
    auto [it, inserted] = terms_.try_emplace(M, static_cast<int>(c));
    if (!inserted) {
      it->second = static_cast<int>((it->second + c) % ctx_.p);
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const Element& x, const Element& y) {
    return x.ctx_ == y.ctx_ && x.terms_ == y.terms_;
  }

 private:
  AlgebraCtx ctx_;
  std::map<Monomial, int> terms_;
};

inline void require_same_ctx(const Element& x, const Element& y) {
  if (!(x.ctx() == y.ctx()))
    throw std::invalid_argument("elements from different algebra contexts");
}

inline Element zero(const AlgebraCtx& ctx) { return Element(ctx); }

inline Element add(const Element& x, const Element& y) {
  require_same_ctx(x, y);
  Element out = x;
  for (const auto& [M, c] : y.terms()) out.add_term(M, c);
  return out;
}

inline Element sub(const Element& x, const Element& y) {
  require_same_ctx(x, y);
  Element out = x;
  for (const auto& [M, c] : y.terms()) out.add_term(M, -c);
  return out;
}

inline Element scale(const Element& x, long long c) {
  Element out(x.ctx());
  for (const auto& [M, v] : x.terms()) out.add_term(M, v * (c % x.ctx().p));
  return out;
}

inline Element mul(const Element& x, const Element& y) {
  require_same_ctx(x, y);
  Element out(x.ctx());
  for (const auto& [M1, c1] : x.terms())
    for (const auto& [M2, c2] : y.terms()) {
      const long long cc = static_cast<long long>(c1) * c2 % x.ctx().p;
      mul_mono(x.ctx(), M1, M2,
               [&out, &x, cc](const Monomial& M, int c) { out.add_term(M, cc * c); });
    }
  return out;
}

inline Element gen_mu(const AlgebraCtx& ctx, long long a) {
  // mu_a = mu_b iff a = b (mod p^r); indices reduce to [0, p^r)
  a = ((a % ctx.pr) + ctx.pr) % ctx.pr;
  Element e(ctx);
  e.add_term(Monomial{0, static_cast<int>(a), 0}, 1);
  return e;
}

inline Element identity(const AlgebraCtx& ctx) {
  Element e(ctx);
  for (int a = 0; a < ctx.pr; ++a) e.add_term(Monomial{0, a, 0}, 1);
  return e;
}

namespace detail {
inline void require_index(const AlgebraCtx& ctx, long long n, const char* what) {
  if (n < 0 || n >= ctx.pr)
    throw std::invalid_argument(std::string(what) + ": index out of range");
}
}  // namespace detail

inline Element gen_x(const AlgebraCtx& ctx, long long n) {
  detail::require_index(ctx, n, "gen_x");
  if (n == 0) return identity(ctx);
  Element e(ctx);
  for (int a = 0; a < ctx.pr; ++a)
    e.add_term(Monomial{0, a, static_cast<int>(n)}, 1);
  return e;
}

inline Element gen_y(const AlgebraCtx& ctx, long long n) {
  detail::require_index(ctx, n, "gen_y");
  if (n == 0) return identity(ctx);
  Element e(ctx);
  for (int a = 0; a < ctx.pr; ++a)
    e.add_term(Monomial{static_cast<int>(n), a, 0}, 1);
  return e;
}

// binom(H, n) = sum_a binom(a, n) mu_a: the toral generators are diagonal on
// the weight idempotents.
inline Element gen_binom_h(const AlgebraCtx& ctx, long long n) {
  detail::require_index(ctx, n, "gen_binom_h");
  Element e(ctx);
  for (int a = 0; a < ctx.pr; ++a) e.add_term(Monomial{0, a, 0}, ctx.binom(a, n));
  return e;
}

inline Element elem_pow(const Element& x, int n) {
  Element acc = identity(x.ctx());
  for (int i = 0; i < n; ++i) acc = mul(acc, x);
  return acc;
}

// T_1: the algebra automorphism with X^(m) -> (-1)^m Y^(m),
// Y^(m) -> (-1)^m X^(m), mu_a -> mu_{-a}.
inline Element t1(const Element& e) {
  const AlgebraCtx& ctx = e.ctx();
  Element out(ctx);
  for (const auto& [M, c] : e.terms()) {
    int sign = (M.m + M.mp) % 2 ? ctx.p - 1 : 1;
    Element img = mul(gen_x(ctx, M.m), mul(gen_mu(ctx, -M.a), gen_y(ctx, M.mp)));
    out = add(out, scale(img, static_cast<long long>(c) * sign));
  }
  return out;
}

// T_2: the antiautomorphism with X^(m) -> (-1)^m X^(m),
// Y^(m) -> (-1)^m Y^(m), mu_a -> mu_{-a}; images multiply in reverse order.
inline Element t2(const Element& e) {
  const AlgebraCtx& ctx = e.ctx();
  Element out(ctx);
  for (const auto& [M, c] : e.terms()) {
    int sign = (M.m + M.mp) % 2 ? ctx.p - 1 : 1;
    Element img = mul(gen_x(ctx, M.mp), mul(gen_mu(ctx, -M.a), gen_y(ctx, M.m)));
    out = add(out, scale(img, static_cast<long long>(c) * sign));
  }
  return out;
}

// Fr: divided-power indices divide by p, non-multiples die.  The mu part is
// converted through the binom(H, n) basis, mu_a = sum_i binom(-a-1, p^r-1-i)
// binom(H, i), where Fr keeps only the indices divisible by p.
inline Element fr(const Element& e) {
  const AlgebraCtx& ctx = e.ctx();
  Element out(ctx);
  for (const auto& [M, c] : e.terms()) {
    if (M.m % ctx.p || M.mp % ctx.p) continue;
    for (long long i = 0; i < ctx.pr; i += ctx.p) {
      long long ci = binom_mod(-M.a - 1, ctx.pr - 1 - i, ctx.p);
      if (!ci) continue;
      for (int w = 0; w < ctx.pr; ++w) {
        long long cw = ctx.binom(w, i / ctx.p);
        if (!cw) continue;
        out.add_term(Monomial{M.m / ctx.p, w, M.mp / ctx.p},
                     c * ci % ctx.p * cw);
      }
    }
  }
  return out;
}

// Fr': U_r -> U_{r+1}, k-linear.  On monomials,
// Y^(m) mu_b X^(mp) -> Y^(pm) (sum_{a'<p} mu_{a'+pb}) X^(p mp).
inline Element fr_prime(const Element& e) {
  const AlgebraCtx& ctx = e.ctx();
  AlgebraCtx big = make_ctx(ctx.p, ctx.r + 1);
  Element out(big);
  for (const auto& [M, c] : e.terms())
    for (int ap = 0; ap < ctx.p; ++ap)
      out.add_term(Monomial{ctx.p * M.m,
                            static_cast<int>((ap + static_cast<long long>(ctx.p) * M.a) % big.pr),
                            ctx.p * M.mp},
                   c);
  return out;
}

// The inclusion U_r -> U_R: divided powers map to themselves and
// mu_a^{(r)} = sum of all mu_c^{(R)} with c = a (mod p^r).
inline Element embed(const Element& e, int R) {
  const AlgebraCtx& ctx = e.ctx();
  if (R <= ctx.r) throw std::invalid_argument("embed: target rank must exceed source");
  AlgebraCtx big = make_ctx(ctx.p, R);
  Element out(big);
  for (const auto& [M, c] : e.terms())
    for (long long a = M.a; a < big.pr; a += ctx.pr)
      out.add_term(Monomial{M.m, static_cast<int>(a), M.mp}, c);
  return out;
}

// The common left weight of all terms, if there is one.
inline std::optional<long long> weight_of(const Element& e) {
  if (e.is_zero()) return std::nullopt;
  std::optional<long long> w;
  for (const auto& [M, c] : e.terms()) {
    long long wm = ((M.a - 2LL * M.m) % e.ctx().pr + e.ctx().pr) % e.ctx().pr;
    if (!w)
      w = wm;
    else if (*w != wm)
      return std::nullopt;
  }
  return w;
}

inline std::map<int, Element> degree_split(const Element& e) {
  std::map<int, Element> out;
  for (const auto& [M, c] : e.terms()) {
    auto [it, ins] = out.try_emplace(M.mp - M.m, e.ctx());
    it->second.add_term(M, c);
  }
  return out;
}

// Membership in the degree-zero subalgebra A_r: every term has m = mp.
inline bool is_in_ar(const Element& e) {
  for (const auto& [M, c] : e.terms())
    if (M.m != M.mp) return false;
  return true;
}

// Text format: terms joined by " + ", each "c*Y(m).mu(a).X(mp)", in the
// monomial order.  The zero element renders as "0".
inline std::string to_text(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [M, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*Y(" << M.m << ").mu(" << M.a << ").X(" << M.mp << ")";
  }
  return os.str();
}

inline Element parse_element(const AlgebraCtx& ctx, const std::string& text) {
  Element out(ctx);
  std::string s = text;
  // strip whitespace
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "0" || t.empty()) return out;
  size_t pos = 0;
  while (pos < t.size()) {
    size_t next = t.find('+', pos);
    std::string term = t.substr(pos, next == std::string::npos ? next : next - pos);
    int c, m, a, mp;
    if (std::sscanf(term.c_str(), "%d*Y(%d).mu(%d).X(%d)", &c, &m, &a, &mp) != 4)
      throw std::invalid_argument("parse_element: bad term '" + term + "'");
    if (m < 0 || m >= ctx.pr || a < 0 || a >= ctx.pr || mp < 0 || mp >= ctx.pr)
      throw std::invalid_argument("parse_element: index out of range in '" + term + "'");
    out.add_term(Monomial{m, a, mp}, c);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace hyperalg
