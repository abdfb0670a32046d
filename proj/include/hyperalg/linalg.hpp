#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "hyperalg/hyperalgebra.hpp"

namespace hyperalg {

namespace detail {

// A reduced row-echelon basis over F_p with dense byte rows.  Rows are kept
// pivot-sorted and fully reduced, so the basis of a span is canonical.
class Echelon {
 public:
  Echelon(int p, long long n) : p_(p), n_(static_cast<size_t>(n)) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // x += f * y over F_p, starting at `from`
  static void axpy(std::vector<uint8_t>& x, const std::vector<uint8_t>& y,
                   int f, int p, size_t from) {
    for (size_t i = from; i < x.size(); ++i)
      x[i] = static_cast<uint8_t>((x[i] + f * y[i]) % p);
  }

  void reduce(std::vector<uint8_t>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const uint8_t c = v[pivots_[k]];
      if (c) axpy(v, rows_[k], p_ - c, p_, pivots_[k]);
    }
  }

  // Reduce v against the basis and adjoin it if independent.  Returns the
  // pivot position, or npos if v lies in the current span.
  size_t insert(std::vector<uint8_t> v) {
    reduce(v);
    size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return npos;
    const int f = inv_mod(v[piv], p_);
    if (f != 1)
      for (size_t i = piv; i < n_; ++i)
        v[i] = static_cast<uint8_t>(v[i] * f % p_);
    for (size_t k = 0; k < rows_.size(); ++k) {
      const uint8_t c = rows_[k][piv];
      if (c) axpy(rows_[k], v, p_ - c, p_, piv);
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    const size_t pos = static_cast<size_t>(at - pivots_.begin());
    pivots_.insert(at, piv);
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    return piv;
  }

  bool contains(std::vector<uint8_t> v) const {
    reduce(v);
    for (uint8_t x : v)
      if (x) return false;
    return true;
  }

  static constexpr size_t npos = static_cast<size_t>(-1);

 private:
  int p_;
  size_t n_;
  std::vector<std::vector<uint8_t>> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace detail

inline std::vector<uint8_t> element_to_vec(const AlgebraCtx& ctx, const Element& e) {
  std::vector<uint8_t> v(static_cast<size_t>(ctx.dim), 0);
  for (const auto& [M, c] : e.terms())
    v[static_cast<size_t>(monomial_index(ctx, M))] = static_cast<uint8_t>(c);
  return v;
}

inline Element vec_to_element(const AlgebraCtx& ctx, const std::vector<uint8_t>& v) {
  Element e(ctx);
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) e.add_term(monomial_of_index(ctx, static_cast<long long>(i)), v[i]);
  return e;
}

// y = g * x or x * g for a dense coordinate row x and a (small) element g.
inline std::vector<uint8_t> row_mul(const AlgebraCtx& ctx,
                                    const std::vector<uint8_t>& x,
                                    const Element& g, bool g_on_left) {
  std::vector<uint8_t> out(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    const int xi = x[i];
    if (!xi) continue;
    const Monomial Mi = monomial_of_index(ctx, static_cast<long long>(i));
    for (const auto& [Mg, cg] : g.terms()) {
      const int f = xi * cg % ctx.p;
      const auto emit = [&out, &ctx, f](const Monomial& M, int c) {
        const size_t s = static_cast<size_t>(monomial_index(ctx, M));
        out[s] = static_cast<uint8_t>((out[s] + f * c) % ctx.p);
      };
      if (g_on_left)
        mul_mono(ctx, Mg, Mi, emit);
      else
        mul_mono(ctx, Mi, Mg, emit);
    }
  }
  return out;
}

// An exact subspace of U_r in reduced echelon form over the monomial order.
class Subspace {
 public:
  explicit Subspace(AlgebraCtx ctx) : ctx_(std::move(ctx)), ech_(ctx_.p, ctx_.dim) {}

  static Subspace span(const AlgebraCtx& ctx, const std::vector<Element>& gens) {
    Subspace s(ctx);
    for (const Element& e : gens) s.insert(e);
    return s;
  }

  const AlgebraCtx& ctx() const { return ctx_; }
  int dim() const { return ech_.dim(); }
  const std::vector<std::vector<uint8_t>>& rows() const { return ech_.rows(); }

  bool insert(const Element& e) {
    if (!(e.ctx() == ctx_)) throw std::invalid_argument("Subspace: context mismatch");
    return ech_.insert(element_to_vec(ctx_, e)) != detail::Echelon::npos;
  }
  bool insert_row(std::vector<uint8_t> v) {
    return ech_.insert(std::move(v)) != detail::Echelon::npos;
  }

  bool member(const Element& e) const {
    if (!(e.ctx() == ctx_)) throw std::invalid_argument("Subspace: context mismatch");
    return ech_.contains(element_to_vec(ctx_, e));
  }
  bool contains_row(const std::vector<uint8_t>& v) const { return ech_.contains(v); }

  bool contains(const Subspace& other) const {
    for (const auto& row : other.rows())
      if (!ech_.contains(row)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ctx_ == b.ctx_ && a.rows() == b.rows();
  }

  std::vector<Element> basis_elements() const {
    std::vector<Element> out;
    out.reserve(rows().size());
    for (const auto& row : rows()) out.push_back(vec_to_element(ctx_, row));
    return out;
  }

  // One row per line in the element text format, pivot-sorted.
  std::string dump() const {
    std::string out;
    for (const Element& e : basis_elements()) {
      out += to_text(e);
      out += '\n';
    }
    return out;
  }

 private:
  AlgebraCtx ctx_;
  detail::Echelon ech_;
};

inline Subspace add(const Subspace& a, const Subspace& b) {
  if (!(a.ctx() == b.ctx())) throw std::invalid_argument("add: context mismatch");
  Subspace out = a;
  for (const auto& row : b.rows()) out.insert_row(row);
  return out;
}

// Zassenhaus: echelonize [a | a] stacked over [b | 0]; rows whose left half
// vanishes carry a basis of the intersection in the right half.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (!(a.ctx() == b.ctx())) throw std::invalid_argument("intersect: context mismatch");
  const size_t n = static_cast<size_t>(a.ctx().dim);
  detail::Echelon ech(a.ctx().p, static_cast<long long>(2 * n));
  for (const auto& row : a.rows()) {
    std::vector<uint8_t> v(2 * n, 0);
    std::copy(row.begin(), row.end(), v.begin());
    std::copy(row.begin(), row.end(), v.begin() + static_cast<long>(n));
    ech.insert(std::move(v));
  }
  for (const auto& row : b.rows()) {
    std::vector<uint8_t> v(2 * n, 0);
    std::copy(row.begin(), row.end(), v.begin());
    ech.insert(std::move(v));
  }
  Subspace out(a.ctx());
  for (size_t k = 0; k < ech.rows().size(); ++k) {
    if (ech.pivots()[k] < n) continue;
    out.insert_row(std::vector<uint8_t>(ech.rows()[k].begin() + static_cast<long>(n),
                                        ech.rows()[k].end()));
  }
  return out;
}

// X^(p^i), Y^(p^i): generate U_r as a unital algebra, since every X^(a)
// factors carry-free through its p-adic digits.
inline std::vector<Element> default_multipliers(const AlgebraCtx& ctx) {
  std::vector<Element> out;
  long long pi = 1;
  for (int i = 0; i < ctx.r; ++i, pi *= ctx.p) {
    out.push_back(gen_x(ctx, pi));
    out.push_back(gen_y(ctx, pi));
  }
  return out;
}

// Generators of the Borel subalgebra U_r^{>=0} (or U_r^{<=0}): the one-sided
// divided powers together with all weight idempotents.
inline std::vector<Element> borel_multipliers(const AlgebraCtx& ctx, bool positive) {
  std::vector<Element> out;
  long long pi = 1;
  for (int i = 0; i < ctx.r; ++i, pi *= ctx.p)
    out.push_back(positive ? gen_x(ctx, pi) : gen_y(ctx, pi));
  for (int a = 0; a < ctx.pr; ++a) out.push_back(gen_mu(ctx, a));
  return out;
}

// Least subspace containing gens and closed under left and right
// multiplication by every multiplier.  Each independent row is processed
// once against every multiplier; termination is by the dimension bound.
inline Subspace ideal_closure(const AlgebraCtx& ctx, const std::vector<Element>& gens,
                              const std::vector<Element>& multipliers) {
  Subspace s(ctx);
  std::deque<std::vector<uint8_t>> work;
  for (const Element& e : gens) {
    if (!(e.ctx() == ctx)) throw std::invalid_argument("ideal_closure: context mismatch");
    std::vector<uint8_t> v = element_to_vec(ctx, e);
    if (s.insert_row(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    std::vector<uint8_t> v = std::move(work.front());
    work.pop_front();
    for (const Element& g : multipliers) {
      for (bool left : {true, false}) {
        std::vector<uint8_t> w = row_mul(ctx, v, g, left);
        if (s.insert_row(w)) work.push_back(std::move(w));
      }
    }
  }
  return s;
}

inline bool closed_under(const Subspace& s, const std::vector<Element>& multipliers) {
  for (const auto& row : s.rows())
    for (const Element& g : multipliers)
      for (bool left : {true, false})
        if (!s.contains_row(row_mul(s.ctx(), row, g, left))) return false;
  return true;
}

// Span of all pairwise products of basis rows.
inline Subspace subspace_product(const Subspace& a, const Subspace& b) {
  if (!(a.ctx() == b.ctx())) throw std::invalid_argument("subspace_product: context mismatch");
  const AlgebraCtx& ctx = a.ctx();
  Subspace out(ctx);
  for (const auto& u : a.rows()) {
    Element eu = vec_to_element(ctx, u);
    for (const auto& v : b.rows()) out.insert_row(row_mul(ctx, v, eu, true));
  }
  return out;
}

struct NilpotencyResult {
  bool nilpotent = false;
  int index = 0;  // least n with S^n = 0 when nilpotent
};

// Least n with S^n = 0.  A non-nilpotent input is reported, not thrown:
// powers of an ideal shrink strictly until zero, so a power ladder that
// stops shrinking (or runs past the dimension bound) settles it.
inline NilpotencyResult nilpotency_index(const Subspace& s) {
  if (s.dim() == 0) return {true, 1};
  Subspace cur = s;
  int n = 1;
  while (cur.dim() > 0) {
    if (n > s.ctx().dim + 1) return {false, n};
    Subspace next = subspace_product(cur, s);
    if (next.dim() >= cur.dim()) return {false, n};
    cur = std::move(next);
    ++n;
  }
  return {true, n};
}

// Elements x with v x = 0 for every v in the radical.  Since the radical is
// a left ideal, it suffices to test a set of left-ideal generators w: for
// v = sum u_j w_j one has v x = sum u_j (w_j x).  The generators are peeled
// off the radical basis by spinning the left-ideal closure.
inline Subspace left_socle(const AlgebraCtx& ctx, const Subspace& radical) {
  std::vector<Element> left_mults = default_multipliers(ctx);
  detail::Echelon closed(ctx.p, ctx.dim);
  std::vector<Element> gens;
  std::deque<std::vector<uint8_t>> work;
  for (const auto& row : radical.rows()) {
    if (closed.contains(row)) continue;
    gens.push_back(vec_to_element(ctx, row));
    closed.insert(row);
    work.push_back(row);
    while (!work.empty()) {
      std::vector<uint8_t> v = std::move(work.front());
      work.pop_front();
      for (const Element& g : left_mults) {
        std::vector<uint8_t> w = row_mul(ctx, v, g, true);
        if (closed.insert(w) != detail::Echelon::npos) work.push_back(std::move(w));
      }
    }
  }

  // intersect the kernels of left multiplication by each generator
  const size_t n = static_cast<size_t>(ctx.dim);
  std::vector<std::vector<uint8_t>> K(n);
  for (size_t i = 0; i < n; ++i) {
    K[i].assign(n, 0);
    K[i][i] = 1;
  }
  for (const Element& w : gens) {
    if (K.empty()) break;
    const size_t k = K.size();
    // rows of Y are w * K_t; kernel combos of Y give the surviving space
    detail::Echelon ech(ctx.p, static_cast<long long>(n + k));
    std::vector<std::vector<uint8_t>> next;
    for (size_t tdx = 0; tdx < k; ++tdx) {
      std::vector<uint8_t> y = row_mul(ctx, K[tdx], w, true);
      std::vector<uint8_t> aug(n + k, 0);
      std::copy(y.begin(), y.end(), aug.begin());
      aug[n + tdx] = 1;
      if (ech.insert(std::move(aug)) == detail::Echelon::npos)
        throw std::logic_error("left_socle: dependent kernel row");
    }
    for (size_t row = 0; row < ech.rows().size(); ++row) {
      if (ech.pivots()[row] < n) continue;
      // combo with zero image: rebuild the kernel vector
      std::vector<uint8_t> x(n, 0);
      for (size_t tdx = 0; tdx < k; ++tdx) {
        const int f = ech.rows()[row][n + tdx];
        if (f) detail::Echelon::axpy(x, K[tdx], f, ctx.p, 0);
      }
      next.push_back(std::move(x));
    }
    K = std::move(next);
  }
  Subspace out(ctx);
  for (auto& row : K) out.insert_row(std::move(row));
  return out;
}

}  // namespace hyperalg
