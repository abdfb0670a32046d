#pragma once

#include <map>
#include <vector>

#include "hyperalg/belements.hpp"
#include "hyperalg/linalg.hpp"

namespace hyperalg {

// Square matrix over F_p, row-major.
struct MatFp {
  int n = 0;
  std::vector<uint8_t> a;

  static MatFp zeros(int n) { return MatFp{n, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0)}; }
  static MatFp eye(int n) {
    MatFp m = zeros(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool is_zero() const {
    for (uint8_t x : a)
      if (x) return false;
    return true;
  }
  friend bool operator==(const MatFp&, const MatFp&) = default;
};

inline MatFp matmul(const MatFp& x, const MatFp& y, int p) {
  MatFp out = MatFp::zeros(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const int c = x.at(i, k);
      if (!c) continue;
      for (int j = 0; j < x.n; ++j)
        out.at(i, j) = static_cast<uint8_t>((out.at(i, j) + c * y.at(k, j)) % p);
    }
  return out;
}

inline MatFp matadd_scaled(const MatFp& x, const MatFp& y, int c, int p) {
  MatFp out = x;
  for (size_t i = 0; i < out.a.size(); ++i)
    out.a[i] = static_cast<uint8_t>((out.a[i] + c * y.a[i]) % p);
  return out;
}

// The simple module L(lambda), 0 <= lambda < p^r, realized as the twisted
// tensor product over the p-adic digits of lambda: factor i is the simple
// rank-one module of highest weight lambda_i, with basis v_0..v_{lambda_i},
//   X^(m) v_k = binom(lambda_i - k + m, m) v_{k-m},
//   Y^(m) v_k = binom(k + m, m) v_{k+m},
// and X^(p^i), Y^(p^i) act on factor i as the first divided powers.  This
// construction never touches the algebra multiplication: it is the
// independent ingredient of the radical oracle.
struct SimpleModule {
  AlgebraCtx ctx;
  long long lambda = 0;
  std::vector<int> digits;
  int dim = 0;
  std::vector<MatFp> x_gen, y_gen;          // action of X^(p^i), Y^(p^i)
  std::vector<std::vector<uint8_t>> mu_ind;  // mu_a acts as a 0/1 diagonal
};

inline SimpleModule build_simple(const AlgebraCtx& ctx, long long lambda) {
  if (lambda < 0 || lambda >= ctx.pr)
    throw std::invalid_argument("build_simple: lambda out of range");
  SimpleModule mod;
  mod.ctx = ctx;
  mod.lambda = lambda;
  long long rest = lambda;
  for (int i = 0; i < ctx.r; ++i) {
    mod.digits.push_back(static_cast<int>(rest % ctx.p));
    rest /= ctx.p;
  }
  mod.dim = 1;
  std::vector<int> stride(ctx.r, 1);
  for (int i = 0; i < ctx.r; ++i) {
    stride[i] = mod.dim;
    mod.dim *= mod.digits[i] + 1;
  }
  const auto digit_at = [&](int state, int i) { return state / stride[i] % (mod.digits[i] + 1); };
  for (int i = 0; i < ctx.r; ++i) {
    MatFp X = MatFp::zeros(mod.dim), Y = MatFp::zeros(mod.dim);
    for (int s = 0; s < mod.dim; ++s) {
      const int k = digit_at(s, i);
      if (k >= 1) X.at(s - stride[i], s) = static_cast<uint8_t>((mod.digits[i] - k + 1) % ctx.p);
      if (k + 1 <= mod.digits[i]) Y.at(s + stride[i], s) = static_cast<uint8_t>((k + 1) % ctx.p);
    }
    mod.x_gen.push_back(std::move(X));
    mod.y_gen.push_back(std::move(Y));
  }
  mod.mu_ind.assign(static_cast<size_t>(ctx.pr), std::vector<uint8_t>(mod.dim, 0));
  for (int s = 0; s < mod.dim; ++s) {
    long long w = 0, pi = 1;
    for (int i = 0; i < ctx.r; ++i, pi *= ctx.p) w += pi * (mod.digits[i] - 2 * digit_at(s, i));
    mod.mu_ind[static_cast<size_t>(((w % ctx.pr) + ctx.pr) % ctx.pr)][s] = 1;
  }
  return mod;
}

namespace detail {
// X^(n) = prod_i (X^(p^i))^{n_i} / prod_i n_i!  (carry-free factorization).
inline MatFp divided_power_action(const SimpleModule& mod, const std::vector<MatFp>& gens,
                                  long long n) {
  const int p = mod.ctx.p;
  MatFp acc = MatFp::eye(mod.dim);
  long long fact = 1;
  long long rest = n;
  for (int i = 0; i < mod.ctx.r; ++i) {
    const int d = static_cast<int>(rest % p);
    rest /= p;
    for (int q = 0; q < d; ++q) acc = matmul(acc, gens[i], p);
    for (int q = 2; q <= d; ++q) fact = fact * q % p;
  }
  const int f = inv_mod(fact, p);
  if (f != 1)
    for (auto& x : acc.a) x = static_cast<uint8_t>(x * f % p);
  return acc;
}
}  // namespace detail

inline MatFp act_mono(const SimpleModule& mod, const Monomial& M) {
  const int p = mod.ctx.p;
  MatFp X = detail::divided_power_action(mod, mod.x_gen, M.mp);
  MatFp Y = detail::divided_power_action(mod, mod.y_gen, M.m);
  // apply mu diag between Y and X
  MatFp mid = X;
  for (int i = 0; i < mod.dim; ++i) {
    const uint8_t keep = mod.mu_ind[static_cast<size_t>(M.a)][i];
    if (!keep)
      for (int j = 0; j < mod.dim; ++j) mid.at(i, j) = 0;
  }
  return matmul(Y, mid, p);
}

inline MatFp act(const Element& e, const SimpleModule& mod) {
  if (!(e.ctx() == mod.ctx)) throw std::invalid_argument("act: context mismatch");
  MatFp out = MatFp::zeros(mod.dim);
  for (const auto& [M, c] : e.terms())
    out = matadd_scaled(out, act_mono(mod, M), c, mod.ctx.p);
  return out;
}

inline std::vector<SimpleModule> all_simples(const AlgebraCtx& ctx) {
  std::vector<SimpleModule> mods;
  mods.reserve(static_cast<size_t>(ctx.pr));
  for (long long lam = 0; lam < ctx.pr; ++lam) mods.push_back(build_simple(ctx, lam));
  return mods;
}

// rad U_r as the kernel of U_r -> (+)_lambda End L(lambda).  Independent of
// the algebra's multiplication and of the idempotent machinery.  The kernel
// is read off a row-reduced (sum of squares) x p^{3r} matrix whose columns
// are the concatenated action vectors of the basis monomials.
inline Subspace oracle_radical(const AlgebraCtx& ctx, bool allow_large = false) {
  if (ctx.dim > 1000 && !allow_large)
    throw std::invalid_argument("oracle_radical: dimension " + std::to_string(ctx.dim) +
                                " exceeds the default budget; pass allow_large");
  const int p = ctx.p;
  std::vector<SimpleModule> mods = all_simples(ctx);
  size_t cols = 0;
  for (const SimpleModule& m : mods) cols += static_cast<size_t>(m.dim) * m.dim;
  const size_t n = static_cast<size_t>(ctx.dim);

  std::vector<std::vector<uint8_t>> M(cols, std::vector<uint8_t>(n, 0));
  size_t off = 0;
  for (const SimpleModule& m : mods) {
    // divided-power action matrices, one per exponent
    std::vector<MatFp> xmat, ymat;
    for (long long e = 0; e < ctx.pr; ++e) {
      xmat.push_back(detail::divided_power_action(m, m.x_gen, e));
      ymat.push_back(detail::divided_power_action(m, m.y_gen, e));
    }
    for (size_t q = 0; q < n; ++q) {
      const Monomial mono = monomial_of_index(ctx, static_cast<long long>(q));
      MatFp mid = xmat[static_cast<size_t>(mono.mp)];
      for (int i = 0; i < m.dim; ++i)
        if (!m.mu_ind[static_cast<size_t>(mono.a)][static_cast<size_t>(i)])
          for (int j = 0; j < m.dim; ++j) mid.at(i, j) = 0;
      const MatFp A = matmul(ymat[static_cast<size_t>(mono.m)], mid, p);
      for (size_t c = 0; c < A.a.size(); ++c)
        if (A.a[c]) M[off + c][q] = A.a[c];
    }
    off += static_cast<size_t>(m.dim) * m.dim;
  }

  // row reduction; kernel vectors come from the free columns
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < cols; ++col) {
    size_t piv = rank;
    while (piv < cols && M[piv][col] == 0) ++piv;
    if (piv == cols) continue;
    std::swap(M[rank], M[piv]);
    const int f = inv_mod(M[rank][col], p);
    if (f != 1)
      for (size_t j = col; j < n; ++j)
        M[rank][j] = static_cast<uint8_t>(M[rank][j] * f % p);
    for (size_t i = 0; i < cols; ++i) {
      if (i == rank) continue;
      const uint8_t c = M[i][col];
      if (c) detail::Echelon::axpy(M[i], M[rank], p - c, p, col);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  Subspace out(ctx);
  std::vector<uint8_t> is_pivot(n, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint8_t> x(n, 0);
    x[f] = 1;
    for (size_t k = 0; k < rank; ++k)
      if (M[k][f]) x[pivot_col[k]] = static_cast<uint8_t>(p - M[k][f]);
    out.insert_row(std::move(x));
  }
  return out;
}

// The highest weight of the simple module generated by B^(1)(a, j): digits
// b_i + 2 n^(0)(a_i, j_i).
inline long long lambda_of_tuple(int p, const TupleAJ& tuple) {
  long long lam = 0, pi = 1;
  for (const Pair& q : tuple) {
    lam += pi * (iota(p, q) + 2 * n_bound(p, q, 0));
    pi *= p;
  }
  return lam;
}

namespace detail {

// Enumerate the claimed radical basis and the V complement together.
// The V subset is indexed by theta = 0 with every t_i in the
// [-n~^(0), n^(0)] box.
inline void enumerate_basis_split(const AlgebraCtx& ctx, std::vector<Element>* rad_out,
                                  std::vector<Element>* v_out) {
  const int p = ctx.p, r = ctx.r;
  std::map<std::pair<int, int>, Element> upow_cache;
  const auto upow = [&](int i, int t) {
    auto key = std::make_pair(i, t);
    auto it = upow_cache.find(key);
    if (it == upow_cache.end()) it = upow_cache.emplace(key, u_pow(ctx, i, t)).first;
    return it->second;
  };
  for (const TupleAJ& tuple : enumerate_tuples(p, r)) {
    std::map<EpsVec, Element> base;
    for (const ThetaEntry& th : theta_set(p, tuple, EpsVec(static_cast<size_t>(r), 0))) {
      auto it = base.find(th.theta);
      if (it == base.end()) it = base.emplace(th.theta, b_tuple(p, th.theta, tuple)).first;
      Element e = it->second;
      for (int i = r - 1; i >= 0; --i)
        if (th.t[static_cast<size_t>(i)]) e = mul(upow(i, th.t[static_cast<size_t>(i)]), e);
      bool in_v = true;
      for (int i = 0; i < r && in_v; ++i) {
        if (th.theta[static_cast<size_t>(i)] != 0) in_v = false;
        const int ti = th.t[static_cast<size_t>(i)];
        if (ti < -n_tilde_bound(p, tuple[static_cast<size_t>(i)], 0) ||
            ti > n_bound(p, tuple[static_cast<size_t>(i)], 0))
          in_v = false;
      }
      if (in_v) {
        if (v_out) v_out->push_back(std::move(e));
      } else if (rad_out) {
        rad_out->push_back(std::move(e));
      }
    }
  }
}

}  // namespace detail

// The claimed basis of rad U_r: all B^(theta)((a,j); t(theta)) indexed by
// Theta_r((a,j), 0) minus the V subset.
inline std::vector<Element> claimed_radical_basis(const AlgebraCtx& ctx) {
  std::vector<Element> out;
  detail::enumerate_basis_split(ctx, &out, nullptr);
  return out;
}

// The V subset, whose image is claimed to base U_r / rad U_r.
inline std::vector<Element> v_set(const AlgebraCtx& ctx) {
  std::vector<Element> out;
  detail::enumerate_basis_split(ctx, nullptr, &out);
  return out;
}

}  // namespace hyperalg
