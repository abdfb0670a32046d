#pragma once

// The per-proposition property checks.  Included from verify.hpp only.

namespace hyperalg {

namespace detail {

// Pascal triangle mod p: the independent cross-check for binom_mod.
// Negative upper arguments reduce through binom(-n, k) = (-1)^k binom(n+k-1, k).
inline int binom_oracle(long long n, long long k, int p, int bound) {
  static thread_local std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  auto& tri = cache[{p, bound}];
  if (tri.empty()) {
    tri.assign(static_cast<size_t>(bound), std::vector<int>(static_cast<size_t>(bound), 0));
    for (int i = 0; i < bound; ++i) {
      tri[static_cast<size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j)
        tri[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
             tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]) %
            p;
    }
  }
  if (k < 0 || k >= bound) throw std::invalid_argument("binom_oracle: k out of range");
  if (n < 0) {
    const int v = binom_oracle(-n + k - 1, k, p, bound);
    return k % 2 ? (p - v) % p : v;
  }
  if (n >= bound) throw std::invalid_argument("binom_oracle: n out of range");
  if (k > n) return 0;
  return tri[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

inline Element random_ar_element(std::mt19937_64& g, const AlgebraCtx& ctx, int nterms) {
  Element e(ctx);
  std::uniform_int_distribution<int> d(0, static_cast<int>(ctx.pr) - 1);
  std::uniform_int_distribution<int> c(1, ctx.p - 1);
  for (int i = 0; i < nterms; ++i) {
    const int m = d(g);
    e.add_term(Monomial{m, d(g), m}, c(g));
  }
  return e;
}

}  // namespace detail

inline std::vector<CheckReport> verify_prop_suite(const AlgebraCtx& ctx,
                                                  const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  detail::Reporter rep{ctx, opts, out};
  const int p = ctx.p, r = ctx.r;
  const long long pr = ctx.pr;

  // ---- prime field -------------------------------------------------------

  rep.run("props/ffield_axioms", [&](auto&) {
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        Scalar x(a, p), y(b, p);
        check_that(x + y == y + x && x * y == y * x, "commutativity");
        if (b) check_that(Scalar(b, p) * inv(Scalar(b, p)) == Scalar(1, p), "inverse");
        for (int c = 0; c < p; ++c) {
          Scalar z(c, p);
          check_that((x + y) + z == x + (y + z), "additive associativity");
          check_that((x * y) * z == x * (y * z), "multiplicative associativity");
          check_that(x * (y + z) == x * y + x * z, "distributivity");
        }
      }
  });

  rep.run("props/binom_periodicity", [&](auto&) {
    const int bound = 4 * p * p + 2;
    for (int k = 0; k < p * p; ++k) {
      long long period = 1;
      while (period <= k) period *= p;
      for (int n = -2 * p * p; n < 2 * p * p; ++n) {
        check_that(binom_mod(n, k, p) == detail::binom_oracle(n, k, p, bound),
                   "binom(" + std::to_string(n) + "," + std::to_string(k) + ") oracle mismatch");
        check_that(binom_mod(n + period, k, p) == binom_mod(n, k, p),
                   "period failure at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  });

  if (pr <= 32) {
    rep.run("props/binom_kummer", [&](auto&) {
      for (int a = 0; a < pr; ++a)
        for (int b = 0; b < pr; ++b)
          if (a + b >= pr)
            check_that(binom_mod(a + b, a, p) == 0,
                       "binom(" + std::to_string(a + b) + "," + std::to_string(a) + ") != 0");
    });
  }

  // ---- algebra structure --------------------------------------------------

  rep.run("props/associativity", [&](auto& details) {
    if (p == 2 && r == 1) {
      for (long long i = 0; i < ctx.dim; ++i)
        for (long long j = 0; j < ctx.dim; ++j)
          for (long long k = 0; k < ctx.dim; ++k) {
            Element x(ctx), y(ctx), z(ctx);
            x.add_term(monomial_of_index(ctx, i), 1);
            y.add_term(monomial_of_index(ctx, j), 1);
            z.add_term(monomial_of_index(ctx, k), 1);
            check_that(mul(mul(x, y), z) == mul(x, mul(y, z)),
                       "triple " + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k));
          }
      details["mode"] = "exhaustive";
    } else {
      auto g = rep.rng("props/associativity");
      for (int t = 0; t < 200; ++t) {
        Element x(ctx), y(ctx), z(ctx);
        x.add_term(detail::random_monomial(g, ctx), 1);
        y.add_term(detail::random_monomial(g, ctx), 1);
        z.add_term(detail::random_monomial(g, ctx), 1);
        check_that(mul(mul(x, y), z) == mul(x, mul(y, z)),
                   "triple " + detail::show(x) + " ; " + detail::show(y) + " ; " +
                       detail::show(z));
      }
      details["mode"] = "random(200)";
    }
  });

  rep.run("props/unit", [&](auto&) {
    Element one = identity(ctx);
    for (long long i = 0; i < ctx.dim; ++i) {
      Element e(ctx);
      e.add_term(monomial_of_index(ctx, i), 1);
      check_that(mul(one, e) == e && mul(e, one) == e, "monomial " + std::to_string(i));
    }
  });

  if (r == 1 && p <= 3) {
    rep.run("props/comm_prop", [&](auto&) {
      AlgebraCtx big = make_ctx(p, r + 1);
      for (int n = 1; n < p; ++n) {
        Element xl = gen_x(big, pr * n), yl = gen_y(big, pr * n);
        for (int m = 0; m < pr; ++m)
          for (int a = 0; a < pr; ++a) {
            Element e(ctx);
            e.add_term(Monomial{m, a, m}, 1);
            Element be = embed(e, r + 1);
            check_that(mul(xl, be) == mul(be, xl) && mul(yl, be) == mul(be, yl),
                       "A_r element m=" + std::to_string(m) + " a=" + std::to_string(a));
          }
      }
    });
  }

  if (r == 2 && p <= 3) {
    rep.run("props/multiplication_iso", [&](auto& details) {
      AlgebraCtx c1 = make_ctx(p, 1);
      AlgebraCtx cprev = make_ctx(p, r - 1);
      Subspace span(ctx);
      long long count = 0;
      for (long long i = 0; i < c1.dim; ++i) {
        Element u(c1);
        u.add_term(monomial_of_index(c1, i), 1);
        Element ue = embed(u, r);
        for (long long j = 0; j < cprev.dim; ++j) {
          Element v(cprev);
          v.add_term(monomial_of_index(cprev, j), 1);
          check_that(span.insert(mul(ue, fr_prime(v))), "dependent product at " +
                                                            std::to_string(i) + "," +
                                                            std::to_string(j));
          ++count;
        }
      }
      check_that(span.dim() == ctx.dim, "span dim " + std::to_string(span.dim()));
      details["products"] = std::to_string(count);
    });
  }

  rep.run("props/t1_t2", [&](auto&) {
    auto g = rep.rng("props/t1_t2");
    for (int t = 0; t < 50; ++t) {
      Element x = detail::random_element(g, ctx, 3);
      Element y = detail::random_element(g, ctx, 3);
      check_that(t1(t1(x)) == x, "t1 not involutive on " + detail::show(x));
      check_that(t2(t2(x)) == x, "t2 not involutive on " + detail::show(x));
      check_that(t1(mul(x, y)) == mul(t1(x), t1(y)), "t1 not a homomorphism");
      check_that(t2(mul(x, y)) == mul(t2(y), t2(x)), "t2 not an antihomomorphism");
      Element a = detail::random_ar_element(g, ctx, 3);
      check_that(t1(a) == t2(a), "t1 != t2 on a degree-zero element " + detail::show(a));
    }
    for (int a = 0; a < pr; ++a) {
      check_that(t1(gen_mu(ctx, a)) == gen_mu(ctx, -a), "t1(mu_a) at a=" + std::to_string(a));
      check_that(t2(gen_mu(ctx, a)) == gen_mu(ctx, -a), "t2(mu_a) at a=" + std::to_string(a));
    }
    for (int m = 0; m < pr; ++m) {
      const int sgn = m % 2 ? -1 : 1;
      check_that(t1(gen_x(ctx, m)) == scale(gen_y(ctx, m), sgn), "t1(X^(m)) at m=" + std::to_string(m));
      check_that(t2(gen_x(ctx, m)) == scale(gen_x(ctx, m), sgn), "t2(X^(m)) at m=" + std::to_string(m));
    }
  });

  if (r >= 2) {
    rep.run("props/fr_endomorphism", [&](auto&) {
      check_that(fr(gen_x(ctx, p)) == gen_x(ctx, 1), "Fr(X^(p)) != X^(1)");
      check_that(fr(gen_y(ctx, p)) == gen_y(ctx, 1), "Fr(Y^(p)) != Y^(1)");
      check_that(fr(gen_x(ctx, 1)).is_zero(), "Fr(X^(1)) != 0");
      check_that(fr(identity(ctx)) == identity(ctx), "Fr(1) != 1");
      auto g = rep.rng("props/fr_endomorphism");
      for (int t = 0; t < 40; ++t) {
        Element x = detail::random_element(g, ctx, 2);
        Element y = detail::random_element(g, ctx, 2);
        check_that(fr(mul(x, y)) == mul(fr(x), fr(y)), "Fr not multiplicative");
      }
    });
  }

  if (pr <= 9) {
    rep.run("props/fr_frprime_identity", [&](auto&) {
      for (int a = 0; a < pr; ++a)
        for (int mp = 0; mp < pr; ++mp) {
          Element e(ctx);
          e.add_term(Monomial{0, a, mp}, 1);
          check_that(fr(fr_prime(e)) == embed(e, r + 1),
                     "Fr(Fr'(e)) != e at a=" + std::to_string(a) + ", mp=" + std::to_string(mp));
        }
    });
  }

  rep.run("props/frprime_borel_multiplicative", [&](auto&) {
    auto g = rep.rng("props/frprime_borel_multiplicative");
    std::uniform_int_distribution<int> d(0, static_cast<int>(pr) - 1);
    const int trials = pr <= 4 ? -1 : 200;
    const auto try_pair = [&](const Monomial& M1, const Monomial& M2) {
      Element x(ctx), y(ctx);
      x.add_term(M1, 1);
      y.add_term(M2, 1);
      check_that(fr_prime(mul(x, y)) == mul(fr_prime(x), fr_prime(y)),
                 "Fr' not multiplicative on " + detail::show(x) + " ; " + detail::show(y));
    };
    if (trials < 0) {
      for (int a1 = 0; a1 < pr; ++a1)
        for (int n1 = 0; n1 < pr; ++n1)
          for (int a2 = 0; a2 < pr; ++a2)
            for (int n2 = 0; n2 < pr; ++n2) {
              try_pair(Monomial{0, a1, n1}, Monomial{0, a2, n2});
              try_pair(Monomial{n1, a1, 0}, Monomial{n2, a2, 0});
            }
    } else {
      for (int t = 0; t < trials; ++t) {
        try_pair(Monomial{0, d(g), d(g)}, Monomial{0, d(g), d(g)});
        try_pair(Monomial{d(g), d(g), 0}, Monomial{d(g), d(g), 0});
      }
    }
  });

  rep.run("props/embed_mul", [&](auto&) {
    auto g = rep.rng("props/embed_mul");
    for (int t = 0; t < 100; ++t) {
      Element x = detail::random_element(g, ctx, 2);
      Element y = detail::random_element(g, ctx, 2);
      check_that(embed(mul(x, y), r + 1) == mul(embed(x, r + 1), embed(y, r + 1)),
                 "embedding does not commute with products");
    }
  });

  rep.run("props/grading", [&](auto&) {
    auto g = rep.rng("props/grading");
    for (int t = 0; t < 100; ++t) {
      const Monomial M1 = detail::random_monomial(g, ctx);
      const Monomial M2 = detail::random_monomial(g, ctx);
      Element x(ctx), y(ctx);
      x.add_term(M1, 1);
      y.add_term(M2, 1);
      const int want = (M1.mp - M1.m) + (M2.mp - M2.m);
      for (const auto& [d, part] : degree_split(mul(x, y)))
        check_that(d == want, "degree " + std::to_string(d) + " in a product of degrees " +
                                  std::to_string(M1.mp - M1.m) + " and " +
                                  std::to_string(M2.mp - M2.m));
    }
  });

  rep.run("props/weights", [&](auto&) {
    for (int a = 0; a < pr; ++a)
      check_that(weight_of(gen_mu(ctx, a)) == std::optional<long long>(a),
                 "weight of mu_" + std::to_string(a));
    if (pr > 1) {
      check_that(!weight_of(gen_x(ctx, 1)).has_value(), "X^(1) is not a weight vector");
      Element e = mul(gen_mu(ctx, 1), gen_x(ctx, 1));
      check_that(weight_of(e) == std::optional<long long>(1), "weight of mu_1 X^(1)");
      check_that(!is_in_ar(e) && is_in_ar(mul(gen_y(ctx, 1), gen_x(ctx, 1))), "A_r predicate");
    }
  });

  rep.run("props/mu_formulas", [&](auto&) {
    for (int a = 0; a < pr; ++a)
      for (int n = 0; n < pr; ++n) {
        check_that(mul(gen_mu(ctx, a), gen_x(ctx, n)) == mul(gen_x(ctx, n), gen_mu(ctx, a - 2 * n)),
                   "mu/X shift at a=" + std::to_string(a) + " n=" + std::to_string(n));
        check_that(mul(gen_mu(ctx, a), gen_y(ctx, n)) == mul(gen_y(ctx, n), gen_mu(ctx, a + 2 * n)),
                   "mu/Y shift at a=" + std::to_string(a) + " n=" + std::to_string(n));
      }
    for (int i = 1; i < r; ++i) {
      long long pi = detail::pow_ll(p, i);
      for (int a = 0; a < pr; ++a) {
        Element lhs = gen_mu(ctx, a);
        Element rhs = mul(detail::mu_level(ctx, i, a % pi),
                          detail::fr_prime_iter(gen_mu(make_ctx(p, r - i), a / pi), i));
        check_that(lhs == rhs, "digit splitting at a=" + std::to_string(a) +
                                   " i=" + std::to_string(i));
      }
    }
  });

  // ---- index tables --------------------------------------------------------

  rep.run("props/bound_table_identities", [&](auto&) {
    for (const Pair& q : enumerate_p_set(p)) {
      const int n0 = n_bound(p, q, 0), n1 = n_bound(p, q, 1);
      const int t0 = n_tilde_bound(p, q, 0), t1b = n_tilde_bound(p, q, 1);
      check_that(0 <= n0 && n0 <= n1 && n1 <= p - 1, "bound ordering");
      check_that((n0 == n1) == satisfies_e(p, q), "equality iff (E)");
      check_that(n0 + t1b == p - 1 && n1 + t0 == p - 1, "complementarity");
      if (p > 2) {
        const Pair nq = negate_pair(p, q);
        check_that(t0 == n_bound(p, nq, 0) && t1b == n_bound(p, nq, 1),
                   "tilde-by-negation at a=" + std::to_string(q.a));
        const PairClass c = classify(p, q), nc = classify(p, nq);
        const bool flip_ok =
            (c == PairClass::A && nc == PairClass::D) ||
            (c == PairClass::C && nc == PairClass::B) ||
            (c == PairClass::D && nc == PairClass::A) ||
            (c == PairClass::B && (q.a % p == 0 ? nc == PairClass::B : nc == PairClass::C));
        check_that(flip_ok, "classification flip at a=" + std::to_string(q.a) +
                                " 2j=" + std::to_string(q.twoJ));
      }
    }
  });

  rep.run("props/weight_digit_identity", [&](auto&) {
    for (const Pair& q : enumerate_p_set(p)) {
      const int b = iota(p, q);
      const int lhs = b + 2 * n_bound(p, q, 0);
      check_that(lhs == 2 * n_tilde_bound(p, q, 0) - b, "two expressions disagree");
      const PairClass c = classify(p, q);
      const int want = (c == PairClass::A || c == PairClass::D) ? q.twoJ - 1 : p - q.twoJ - 1;
      check_that(lhs == want, "value at a=" + std::to_string(q.a) + " 2j=" + std::to_string(q.twoJ));
    }
  });

  {
    const long long tuple_count = detail::pow_ll(static_cast<long long>(enumerate_p_set(p).size()), r);
    if (tuple_count <= 300) {
      rep.run("props/theta_counting", [&](auto& details) {
        long long total = 0;
        for (const TupleAJ& t : enumerate_tuples(p, r))
          total += static_cast<long long>(theta_set(p, t, EpsVec(static_cast<size_t>(r), 0)).size());
        details["total"] = std::to_string(total);
        check_that(total == ctx.dim, "sum of Theta sizes " + std::to_string(total));
      });
    }
  }

  if (p > 2) {
    rep.run("props/psi_at_j_squared", [&](auto&) {
      const long long inv2 = inv_mod(2, p);
      for (int twoJ = 0; twoJ <= p - 1; twoJ += 2) {
        const long long j = twoJ % p * inv2 % p;
        long long v = 0;
        const std::vector<int> f = psi_coeffs(p, twoJ, 0);
        for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * j % p * j + *it) % p;
        check_that(v == 1, "psi(j^2) != 1 at 2j=" + std::to_string(twoJ));
      }
    });
  }

  // ---- rank-one B elements -------------------------------------------------

  if (r == 1) {
    const AlgebraCtx& c1 = ctx;
    const auto P = enumerate_p_set(p);
    Element X = gen_x(c1, 1), Y = gen_y(c1, 1);

    rep.run("props/b1_weight", [&](auto&) {
      for (const Pair& q : P)
        for (int eps : {0, 1})
          check_that(weight_of(b1(p, eps, q)) == std::optional<long long>(q.a),
                     "weight at a=" + std::to_string(q.a) + " 2j=" + std::to_string(q.twoJ));
    });

    rep.run("props/b1_leading_coeffs", [&](auto&) {
      for (const Pair& q : P)
        for (int eps : {0, 1}) {
          BCoeffs bc = b_coeffs(p, eps, q);
          check_that(!bc.c.empty() && !bc.c_tilde.empty(), "empty expansion");
          check_that(bc.c.begin()->first == n_bound(p, q, eps),
                     "leading YX index at a=" + std::to_string(q.a) + " 2j=" +
                         std::to_string(q.twoJ) + " eps=" + std::to_string(eps));
          check_that(bc.c_tilde.begin()->first == n_tilde_bound(p, q, eps),
                     "leading XY index at a=" + std::to_string(q.a) + " 2j=" +
                         std::to_string(q.twoJ) + " eps=" + std::to_string(eps));
        }
    });

    rep.run("props/b1_yx_action", [&](auto&) {
      Element YX = mul(Y, X), XY = mul(X, Y);
      for (const Pair& q : P) {
        const int foursq = q.twoJ * q.twoJ % p;
        Element b0 = b1(p, 0, q), b1e = b1(p, 1, q);
        check_that(mul(YX, b0) == add(scale(b0, gamma_aj(p, q, 0).v), scale(b1e, foursq)),
                   "YX B0 at a=" + std::to_string(q.a) + " 2j=" + std::to_string(q.twoJ));
        check_that(mul(XY, b0) == add(scale(b0, gamma_tilde_aj(p, q, 0).v), scale(b1e, foursq)),
                   "XY B0 at a=" + std::to_string(q.a) + " 2j=" + std::to_string(q.twoJ));
        check_that(mul(YX, b1e) == scale(b1e, gamma_aj(p, q, 0).v), "YX B1");
        check_that(mul(XY, b1e) == scale(b1e, gamma_tilde_aj(p, q, 0).v), "XY B1");
      }
    });

    rep.run("props/b1_eq_iff_e", [&](auto&) {
      for (const Pair& q : P)
        check_that((b1(p, 0, q) == b1(p, 1, q)) == satisfies_e(p, q),
                   "a=" + std::to_string(q.a) + " 2j=" + std::to_string(q.twoJ));
    });

    rep.run("props/b1_absorption", [&](auto&) {
      for (const Pair& q : P)
        for (int eps : {0, 1}) {
          Element be = b1(p, eps, q), b0 = b1(p, 0, q);
          check_that(mul(be, b0) == be && mul(b0, be) == be,
                     "a=" + std::to_string(q.a) + " 2j=" + std::to_string(q.twoJ));
        }
    });

    rep.run("props/b1_distinct", [&](auto&) {
      for (int eps : {0, 1})
        for (const Pair& q1 : P)
          for (const Pair& q2 : P)
            check_that((b1(p, eps, q1) == b1(p, eps, q2)) == (q1 == q2),
                       "collision between distinct pairs");
    });

    rep.run("props/b1_shift", [&](auto&) {
      for (const Pair& q : P)
        for (int eps : {0, 1}) {
          Element be = b1(p, eps, q);
          if (p > 2) {
            check_that(mul(X, be) == mul(b1(p, eps, make_pair_aj(p, q.a + 2, q.twoJ)), X),
                       "X shift at a=" + std::to_string(q.a));
            check_that(mul(Y, be) == mul(b1(p, eps, make_pair_aj(p, q.a - 2, q.twoJ)), Y),
                       "Y shift at a=" + std::to_string(q.a));
          } else {
            const Pair img = q.a == 0 ? q : Pair{1, 2 - q.twoJ};
            check_that(mul(X, be) == mul(b1(p, eps, img), X), "X swap at p=2");
            check_that(mul(Y, be) == mul(b1(p, eps, img), Y), "Y swap at p=2");
          }
        }
    });

    rep.run("props/b1_ladder_formulas", [&](auto&) {
      for (const Pair& q : P) {
        Element b0 = b1(p, 0, q), b1e = b1(p, 1, q);
        const int foursq = q.twoJ * q.twoJ % p;
        const int n0 = n_bound(p, q, 0), t0 = n_tilde_bound(p, q, 0);
        for (int s = 0; s <= p - 1; ++s) {
          Element ysxs = mul(elem_pow(Y, s), elem_pow(X, s));
          Element xsys = mul(elem_pow(X, s), elem_pow(Y, s));
          check_that(mul(ysxs, b1e) == scale(b1e, beta_aj(p, q, s).v), "Y^sX^s B1");
          check_that(mul(xsys, b1e) == scale(b1e, beta_tilde_aj(p, q, s).v), "X^sY^s B1");
          if (s <= n0) {
            long long coef = 0;
            for (int i = 0; i < s; ++i) {
              long long prod = 1;
              for (int l = 0; l < s; ++l)
                if (l != i) prod = prod * gamma_aj(p, q, l).v % p;
              coef = (coef + prod) % p;
            }
            Element rhs = add(scale(b0, beta_aj(p, q, s).v), scale(b1e, foursq * coef));
            check_that(mul(ysxs, b0) == rhs, "Y^sX^s B0 inside range, s=" + std::to_string(s));
          } else {
            long long prod = 1;
            for (int i = 0; i < s; ++i)
              if (i != n0) prod = prod * gamma_aj(p, q, i).v % p;
            check_that(mul(ysxs, b0) == scale(b1e, foursq * prod),
                       "Y^sX^s B0 beyond range, s=" + std::to_string(s));
          }
          if (s <= t0) {
            long long coef = 0;
            for (int i = 0; i < s; ++i) {
              long long prod = 1;
              for (int l = 0; l < s; ++l)
                if (l != i) prod = prod * gamma_tilde_aj(p, q, l).v % p;
              coef = (coef + prod) % p;
            }
            Element rhs = add(scale(b0, beta_tilde_aj(p, q, s).v), scale(b1e, foursq * coef));
            check_that(mul(xsys, b0) == rhs, "X^tY^t B0 inside range, t=" + std::to_string(s));
          } else {
            long long prod = 1;
            for (int i = 0; i < s; ++i)
              if (i != t0) prod = prod * gamma_tilde_aj(p, q, i).v % p;
            check_that(mul(xsys, b0) == scale(b1e, foursq * prod),
                       "X^tY^t B0 beyond range, t=" + std::to_string(s));
          }
        }
      }
    });

    if (p <= 5) {
      rep.run("props/z_injectivity", [&](auto&) {
        for (const Pair& q : P)
          for (int eps : {0, 1}) {
            Subspace span(make_ctx(p, 2));
            for (long long i = 0; i < c1.dim; ++i) {
              Element z(c1);
              z.add_term(monomial_of_index(c1, i), 1);
              check_that(span.insert(z_op(eps, q, z)),
                         "dependent image at basis index " + std::to_string(i));
            }
          }
      });
    }

    rep.run("props/z_factorization", [&](auto&) {
      AlgebraCtx c2 = make_ctx(p, 2);
      for (const Pair& q : P) {
        const int b = iota(p, q);
        for (long long i = 0; i < c1.dim; ++i) {
          const Monomial M = monomial_of_index(c1, i);
          Element z(c1);
          z.add_term(M, 1);
          const int n2p = b >= 0 ? M.a : M.a - 1;
          Element zp(c1);
          zp.add_term(Monomial{M.m, ((n2p % p) + p) % p, M.mp}, 1);
          Element fzp = fr_prime(zp);
          for (int eps : {0, 1}) {
            Element img = z_op(eps, q, z);
            Element be = embed(b1(p, eps, q), 2);
            check_that(img == mul(fzp, be) && img == mul(be, fzp),
                       "z' form fails at a=" + std::to_string(q.a) + " 2j=" +
                           std::to_string(q.twoJ) + " monomial " + std::to_string(i));
            check_that(is_in_ar(z) == is_in_ar(img), "A-membership not preserved");
          }
        }
      }
    });

    rep.run("props/z_fr_rule", [&](auto&) {
      AlgebraCtx c2 = make_ctx(p, 2);
      auto g = rep.rng("props/z_fr_rule");
      std::vector<long long> zs;
      if (c1.dim <= 27)
        for (long long i = 0; i < c1.dim; ++i) zs.push_back(i);
      else {
        std::uniform_int_distribution<long long> d(0, c1.dim - 1);
        for (int i = 0; i < 20; ++i) zs.push_back(d(g));
      }
      for (const Pair& q : P)
        for (int eps : {0, 1})
          for (int n = 1; n < p; ++n)
            for (long long i : zs) {
              Element z(c1);
              z.add_term(monomial_of_index(c1, i), 1);
              check_that(mul(gen_x(c2, p * n), z_op(eps, q, z)) ==
                             z_op(eps, q, mul(gen_x(c1, n), z)),
                         "X rule at n=" + std::to_string(n));
              check_that(mul(gen_y(c2, p * n), z_op(eps, q, z)) ==
                             z_op(eps, q, mul(gen_y(c1, n), z)),
                         "Y rule at n=" + std::to_string(n));
            }
    });

    rep.run("props/z_product_rule", [&](auto&) {
      auto g = rep.rng("props/z_product_rule");
      for (const Pair& q : P)
        for (int eps : {0, 1})
          for (int t = 0; t < 10; ++t) {
            Element z1 = detail::random_element(g, c1, 2);
            Element z2 = detail::random_element(g, c1, 2);
            Element want = z_op(eps, q, mul(z1, z2));
            check_that(mul(z_op(eps, q, z1), z_op(0, q, z2)) == want, "eps-0 product");
            check_that(mul(z_op(0, q, z1), z_op(eps, q, z2)) == want, "0-eps product");
          }
    });

    rep.run("props/z_eq_classification", [&](auto&) {
      auto g = rep.rng("props/z_eq_classification");
      std::vector<Element> zs{identity(c1), detail::random_element(g, c1, 3)};
      if (zs[1].is_zero()) zs.pop_back();
      for (const Element& z : zs) {
        for (const Pair& q : P)
          check_that((z_op(0, q, z) == z_op(1, q, z)) == satisfies_e(p, q),
                     "eps classes at a=" + std::to_string(q.a) + " 2j=" + std::to_string(q.twoJ));
        for (const Pair& q1 : P)
          for (const Pair& q2 : P)
            for (int eps : {0, 1})
              check_that((z_op(eps, q1, z) == z_op(eps, q2, z)) == (q1 == q2),
                         "pair classes collision");
      }
    });
  }

  // ---- tuple-level B elements ----------------------------------------------

  if (r <= 2) {
    const auto tuples = enumerate_tuples(p, r);
    const auto epsall = detail::all_eps(r);
    const AlgebraCtx c1 = make_ctx(p, 1);

    rep.run("props/z_tuple_weight", [&](auto&) {
      for (const TupleAJ& t : tuples)
        for (const EpsVec& eps : epsall) {
          long long want = 0, pi = 1;
          for (int i = 0; i < r; ++i, pi *= p) want += pi * iota(p, t[static_cast<size_t>(i)]);
          want = ((want % pr) + pr) % pr;
          check_that(weight_of(b_tuple(p, eps, t)) == std::optional<long long>(want),
                     "tuple weight mismatch");
        }
    });

    rep.run("props/z_tuple_action_ladders", [&](auto&) {
      for (const TupleAJ& t : tuples)
        for (const EpsVec& eps : epsall) {
          Element be = b_tuple(p, eps, t);
          for (int i = 0; i < r; ++i) {
            const Pair& q = t[static_cast<size_t>(i)];
            const int foursq = q.twoJ * q.twoJ % p;
            EpsVec flip = eps;
            flip[static_cast<size_t>(i)] ^= 1;
            Element bf = b_tuple(p, flip, t);
            const int n0 = n_bound(p, q, 0), t0 = n_tilde_bound(p, q, 0);
            for (int s = 0; s <= p - 1; ++s) {
              Element lhs = mul(u_pow(ctx, i, -s), mul(u_pow(ctx, i, s), be));
              Element lhsT = mul(u_pow(ctx, i, s), mul(u_pow(ctx, i, -s), be));
              if (eps[static_cast<size_t>(i)] == 1) {
                check_that(lhs == scale(be, beta_aj(p, q, s).v), "eps=1 YX ladder");
                check_that(lhsT == scale(be, beta_tilde_aj(p, q, s).v), "eps=1 XY ladder");
                continue;
              }
              if (s <= n0) {
                long long coef = 0;
                for (int l = 0; l < s; ++l) {
                  long long prod = 1;
                  for (int l2 = 0; l2 < s; ++l2)
                    if (l2 != l) prod = prod * gamma_aj(p, q, l2).v % p;
                  coef = (coef + prod) % p;
                }
                check_that(lhs == add(scale(be, beta_aj(p, q, s).v), scale(bf, foursq * coef)),
                           "eps=0 YX ladder inside, s=" + std::to_string(s));
              } else {
                long long prod = 1;
                for (int l = 0; l < s; ++l)
                  if (l != n0) prod = prod * gamma_aj(p, q, l).v % p;
                check_that(lhs == scale(bf, foursq * prod),
                           "eps=0 YX ladder beyond, s=" + std::to_string(s));
              }
              if (s <= t0) {
                long long coef = 0;
                for (int l = 0; l < s; ++l) {
                  long long prod = 1;
                  for (int l2 = 0; l2 < s; ++l2)
                    if (l2 != l) prod = prod * gamma_tilde_aj(p, q, l2).v % p;
                  coef = (coef + prod) % p;
                }
                check_that(lhsT == add(scale(be, beta_tilde_aj(p, q, s).v), scale(bf, foursq * coef)),
                           "eps=0 XY ladder inside, t=" + std::to_string(s));
              } else {
                long long prod = 1;
                for (int l = 0; l < s; ++l)
                  if (l != t0) prod = prod * gamma_tilde_aj(p, q, l).v % p;
                check_that(lhsT == scale(bf, foursq * prod),
                           "eps=0 XY ladder beyond, t=" + std::to_string(s));
              }
            }
          }
        }
    });

    if (p <= 3) {
      rep.run("props/z_tuple_injectivity", [&](auto&) {
        EpsVec zeros(static_cast<size_t>(r), 0);
        for (const TupleAJ& t : tuples) {
          Subspace span(make_ctx(p, r + 1));
          for (long long i = 0; i < c1.dim; ++i) {
            Element z(c1);
            z.add_term(monomial_of_index(c1, i), 1);
            Element img = z;
            for (int k = r - 1; k >= 0; --k)
              img = z_op(zeros[static_cast<size_t>(k)], t[static_cast<size_t>(k)], img);
            check_that(span.insert(img), "dependent tuple image");
          }
        }
      });
    }

    // Z at tuple level: fold over the tuple with z in U_1
    const auto z_tuple = [&](const EpsVec& eps, const TupleAJ& t, const Element& z) {
      Element img = z;
      for (int k = r - 1; k >= 0; --k)
        img = z_op(eps[static_cast<size_t>(k)], t[static_cast<size_t>(k)], img);
      return img;
    };

    rep.run("props/z_tuple_fr_rule", [&](auto&) {
      AlgebraCtx big = make_ctx(p, r + 1);
      auto g = rep.rng("props/z_tuple_fr_rule");
      for (const TupleAJ& t : tuples)
        for (int n = 1; n < p; ++n)
          for (int trial = 0; trial < 3; ++trial) {
            Element z = trial ? detail::random_element(g, c1, 2) : identity(c1);
            for (const EpsVec& eps : x_set(p, t)) {
              check_that(mul(gen_x(big, detail::pow_ll(p, r) * n), z_tuple(eps, t, z)) ==
                             z_tuple(eps, t, mul(gen_x(c1, n), z)),
                         "X^(p^r n) rule");
              check_that(mul(gen_y(big, detail::pow_ll(p, r) * n), z_tuple(eps, t, z)) ==
                             z_tuple(eps, t, mul(gen_y(c1, n), z)),
                         "Y^(p^r n) rule");
            }
          }
    });

    rep.run("props/z_tuple_mu_shift", [&](auto&) {
      AlgebraCtx big = make_ctx(p, r + 1);
      auto g = rep.rng("props/z_tuple_mu_shift");
      for (const TupleAJ& t : tuples) {
        long long bsum = 0, pi = 1;
        for (int i = 0; i < r; ++i, pi *= p) bsum += pi * iota(p, t[static_cast<size_t>(i)]);
        for (const EpsVec& eps : x_set(p, t))
          for (int ap = 0; ap < p; ++ap)
            for (int trial = 0; trial < 2; ++trial) {
              Element z0 = trial ? detail::random_element(g, c1, 2) : identity(c1);
              Element lhs = z_tuple(eps, t, mul(gen_mu(c1, ap), z0));
              Element rhs = mul(gen_mu(big, bsum + detail::pow_ll(p, r) * ap),
                                z_tuple(eps, t, z0));
              check_that(lhs == rhs, "mu shift at a'=" + std::to_string(ap));
            }
      }
    });

    rep.run("props/z_tuple_factorization", [&](auto&) {
      for (const TupleAJ& t : tuples) {
        long long bsum = 0, pi = 1;
        for (int i = 0; i < r; ++i, pi *= p) bsum += pi * iota(p, t[static_cast<size_t>(i)]);
        for (long long i = 0; i < c1.dim; ++i) {
          const Monomial M = monomial_of_index(c1, i);
          Element z(c1);
          z.add_term(M, 1);
          Element zp(c1);
          zp.add_term(Monomial{M.m, ((M.a - (bsum < 0 ? 1 : 0)) % p + p) % p, M.mp}, 1);
          Element fzp = detail::fr_prime_iter(zp, r);
          for (const EpsVec& eps : x_set(p, t)) {
            Element img = z_tuple(eps, t, z);
            Element be = embed(b_tuple(p, eps, t), r + 1);
            check_that(img == mul(fzp, be) && img == mul(be, fzp), "tuple z' form");
          }
        }
      }
    });

    rep.run("props/z_tuple_product_rule", [&](auto&) {
      auto g = rep.rng("props/z_tuple_product_rule");
      EpsVec zeros(static_cast<size_t>(r), 0);
      for (const TupleAJ& t : tuples)
        for (const EpsVec& eps : x_set(p, t))
          for (int trial = 0; trial < 5; ++trial) {
            Element z1 = detail::random_element(g, c1, 2);
            Element z2 = detail::random_element(g, c1, 2);
            Element want = z_tuple(eps, t, mul(z1, z2));
            check_that(mul(z_tuple(eps, t, z1), z_tuple(zeros, t, z2)) == want, "eps-0");
            check_that(mul(z_tuple(zeros, t, z1), z_tuple(eps, t, z2)) == want, "0-eps");
          }
    });

    rep.run("props/z_tuple_classification", [&](auto&) {
      auto g = rep.rng("props/z_tuple_classification");
      std::vector<Element> zs{identity(c1)};
      Element rz = detail::random_element(g, c1, 2);
      if (!rz.is_zero()) zs.push_back(rz);
      for (const Element& z : zs) {
        for (const TupleAJ& t : tuples) {
          std::map<EpsVec, Element> imgs;
          for (const EpsVec& eps : epsall) imgs.emplace(eps, z_tuple(eps, t, z));
          for (const EpsVec& e1 : epsall)
            for (const EpsVec& e2 : epsall) {
              bool want = true;
              for (int i = 0; i < r; ++i)
                if (!satisfies_e(p, t[static_cast<size_t>(i)]) &&
                    e1[static_cast<size_t>(i)] != e2[static_cast<size_t>(i)])
                  want = false;
              check_that((imgs.at(e1) == imgs.at(e2)) == want, "eps classification");
            }
        }
        EpsVec zeros(static_cast<size_t>(r), 0);
        std::vector<Element> imgs;
        for (const TupleAJ& t : tuples) imgs.push_back(z_tuple(zeros, t, z));
        for (size_t i = 0; i < tuples.size(); ++i)
          for (size_t j = 0; j < tuples.size(); ++j)
            check_that((imgs[i] == imgs[j]) == (i == j), "tuple classification");
      }
    });

    rep.run("props/b_tuple_expansion", [&](auto&) {
      for (const TupleAJ& t : tuples) {
        long long bsum = 0, pi = 1;
        for (int i = 0; i < r; ++i, pi *= p) bsum += pi * iota(p, t[static_cast<size_t>(i)]);
        Element mu = gen_mu(ctx, bsum);
        for (const EpsVec& eps : epsall) {
          std::vector<BCoeffs> bcs;
          for (int i = 0; i < r; ++i)
            bcs.push_back(b_coeffs(p, eps[static_cast<size_t>(i)], t[static_cast<size_t>(i)]));
          std::vector<int> lo(static_cast<size_t>(r)), hi(static_cast<size_t>(r), p - 1);
          std::vector<int> lo2(static_cast<size_t>(r)), hi2(static_cast<size_t>(r), p - 1);
          for (int i = 0; i < r; ++i) {
            lo[static_cast<size_t>(i)] = n_bound(p, t[static_cast<size_t>(i)],
                                                 eps[static_cast<size_t>(i)]);
            lo2[static_cast<size_t>(i)] = n_tilde_bound(p, t[static_cast<size_t>(i)],
                                                        eps[static_cast<size_t>(i)]);
          }
          Element rhs(ctx), rhs2(ctx);
          detail::for_each_box(lo, hi, [&](const std::vector<int>& m) {
            long long c = 1;
            Element ypart = identity(ctx), xpart = identity(ctx);
            for (int i = 0; i < r; ++i) {
              auto it = bcs[static_cast<size_t>(i)].c.find(m[static_cast<size_t>(i)]);
              c = c * (it == bcs[static_cast<size_t>(i)].c.end() ? 0 : it->second) % p;
              ypart = mul(ypart, u_pow(ctx, i, -m[static_cast<size_t>(i)]));
              xpart = mul(xpart, u_pow(ctx, i, m[static_cast<size_t>(i)]));
            }
            if (c) rhs = add(rhs, scale(mul(ypart, xpart), c));
          });
          detail::for_each_box(lo2, hi2, [&](const std::vector<int>& m) {
            long long c = 1;
            Element ypart = identity(ctx), xpart = identity(ctx);
            for (int i = 0; i < r; ++i) {
              auto it = bcs[static_cast<size_t>(i)].c_tilde.find(m[static_cast<size_t>(i)]);
              c = c * (it == bcs[static_cast<size_t>(i)].c_tilde.end() ? 0 : it->second) % p;
              ypart = mul(ypart, u_pow(ctx, i, -m[static_cast<size_t>(i)]));
              xpart = mul(xpart, u_pow(ctx, i, m[static_cast<size_t>(i)]));
            }
            if (c) rhs2 = add(rhs2, scale(mul(xpart, ypart), c));
          });
          Element be = b_tuple(p, eps, t);
          check_that(be == mul(mu, rhs), "YX expansion differs");
          check_that(be == mul(mu, rhs2), "XY expansion differs");
        }
      }
    });

    // The literal claim: t1 and t2 send the tuple element to the one indexed
    // by the negated pairs.  This holds for odd p but fails at p = 2, where
    // t1 in fact swaps the labels (1,0) <-> (1,1) just as the X/Y shift
    // rules do: t1(mu_1 YX) = mu_1 XY.
    rep.run("props/b_tuple_twist_negation", [&](auto&) {
      for (const TupleAJ& t : tuples) {
        TupleAJ neg;
        for (const Pair& q : t) neg.push_back(negate_pair(p, q));
        for (const EpsVec& eps : epsall) {
          Element be = b_tuple(p, eps, t);
          Element want = b_tuple(p, eps, neg);
          check_that(t1(be) == want && t2(be) == want, "t1/t2 image of tuple element");
        }
      }
    });

    rep.run("props/b_tuple_twist", [&](auto& details) {
      const auto sigma = [&](const Pair& q) {
        if (p == 2) return q.a == 0 ? q : Pair{1, 2 - q.twoJ};
        return negate_pair(p, q);
      };
      for (const TupleAJ& t : tuples) {
        TupleAJ img;
        for (const Pair& q : t) img.push_back(sigma(q));
        for (const EpsVec& eps : epsall) {
          Element be = b_tuple(p, eps, t);
          Element want = b_tuple(p, eps, img);
          check_that(t1(be) == t2(be), "t1 != t2 on a degree-zero element");
          check_that(t1(be) == want, "t1/t2 image of tuple element");
        }
      }
      if (p == 2) details["note"] = "p=2 image swaps the labels (1,0) and (1,1)";
    });

    rep.run("props/b_shifted_nonzero", [&](auto& details) {
      long long count = 0;
      for (const TupleAJ& t : tuples)
        for (const ThetaEntry& th : theta_set(p, t, EpsVec(static_cast<size_t>(r), 0))) {
          check_that(!b_shifted(p, th.theta, t, th.t).is_zero(), "vanishing inside the box");
          ++count;
        }
      details["count"] = std::to_string(count);
    });
  }

  // ---- simple modules -------------------------------------------------------

  if (p <= 3 && r <= 2) {
    rep.run("props/act_homomorphism", [&](auto&) {
      auto g = rep.rng("props/act_homomorphism");
      for (const SimpleModule& m : all_simples(ctx))
        for (int t = 0; t < 100; ++t) {
          Element x = detail::random_element(g, ctx, 2);
          Element y = detail::random_element(g, ctx, 2);
          check_that(act(mul(x, y), m) == matmul(act(x, m), act(y, m), p),
                     "act not multiplicative on L(" + std::to_string(m.lambda) + ")");
        }
      Element one = identity(ctx);
      for (const SimpleModule& m : all_simples(ctx))
        check_that(act(one, m) == MatFp::eye(m.dim), "act(1) != id");
    });

    rep.run("props/simple_identification", [&](auto&) {
      std::vector<SimpleModule> mods = all_simples(ctx);
      for (const TupleAJ& t : enumerate_tuples(p, r)) {
        const long long lam = lambda_of_tuple(p, t);
        long long dim_expected = 1;
        std::vector<int> top(static_cast<size_t>(r));
        bool all_e = true;
        for (int i = 0; i < r; ++i) {
          const Pair& q = t[static_cast<size_t>(i)];
          dim_expected *= n_bound(p, q, 0) + n_tilde_bound(p, q, 0) + 1;
          top[static_cast<size_t>(i)] = n_bound(p, q, 0);
          all_e = all_e && satisfies_e(p, q);
        }
        check_that(dim_expected == mods[static_cast<size_t>(lam)].dim,
                   "box size != dim L(lambda)");
        EpsVec ones(static_cast<size_t>(r), 1);
        Element hw = b_shifted(p, ones, t, top);
        check_that(!hw.is_zero(), "highest vector vanished");
        check_that(weight_of(hw) == std::optional<long long>(((lam % pr) + pr) % pr),
                   "highest weight mismatch");
        long long pi = 1;
        for (int i = 0; i < r; ++i, pi *= p)
          check_that(mul(gen_x(ctx, pi), hw).is_zero(), "highest vector not killed by X");
        // the cyclic module U_r B^(1) has the dimension of L(lambda)
        Element b = b_tuple(p, ones, t);
        Subspace left(ctx);
        std::deque<std::vector<uint8_t>> work;
        std::vector<uint8_t> v0 = element_to_vec(ctx, b);
        if (left.insert_row(v0)) work.push_back(std::move(v0));
        std::vector<Element> mults = default_multipliers(ctx);
        while (!work.empty()) {
          std::vector<uint8_t> v = std::move(work.front());
          work.pop_front();
          for (const Element& g : mults) {
            std::vector<uint8_t> w = row_mul(ctx, v, g, true);
            if (left.insert_row(w)) work.push_back(std::move(w));
          }
        }
        check_that(left.dim() == dim_expected,
                   "cyclic module dim " + std::to_string(left.dim()) + " != " +
                       std::to_string(dim_expected));
        if (all_e)
          for (const SimpleModule& m : mods)
            check_that(act(b, m).is_zero() == (m.lambda != lam),
                       "idempotent tuple acts on the wrong simples");
      }
    });
  }

  // ---- subspace machinery ----------------------------------------------------

  rep.run("props/echelon_canonical", [&](auto&) {
    auto g = rep.rng("props/echelon_canonical");
    for (int t = 0; t < 10; ++t) {
      std::vector<Element> gens;
      for (int i = 0; i < 6; ++i) gens.push_back(detail::random_element(g, ctx, 3));
      Subspace s1 = Subspace::span(ctx, gens);
      std::shuffle(gens.begin(), gens.end(), g);
      Subspace s2 = Subspace::span(ctx, gens);
      check_that(s1 == s2, "echelon depends on input order");
    }
  });

  if ((p == 2 && r <= 2) || (p == 3 && r == 1)) {
    // the reduced multiplier set {X^(p^i), Y^(p^i)} closes the same ideals
    // as the full set {X^(n), Y^(n) : 0 < n < p^r}
    rep.run("props/closure_multiplier_equivalence", [&](auto&) {
      std::vector<Element> full;
      for (int n = 1; n < pr; ++n) {
        full.push_back(gen_x(ctx, n));
        full.push_back(gen_y(ctx, n));
      }
      const auto reduced = default_multipliers(ctx);
      std::vector<std::vector<Element>> gen_sets = {
          {mul(gen_mu(ctx, 0), gen_x(ctx, 1))},
          {mul(gen_y(ctx, 1), gen_mu(ctx, 1)), gen_binom_h(ctx, 1)}};
      if (p == 2) gen_sets.push_back(main_theorem_generators(ctx, {}));
      for (const auto& gens : gen_sets)
        check_that(ideal_closure(ctx, gens, reduced) == ideal_closure(ctx, gens, full),
                   "closures differ between multiplier sets");
    });
  }

  if (ctx.dim <= 125) {
    rep.run("props/closure_properties", [&](auto&) {
      Element g1 = mul(gen_mu(ctx, 0), gen_x(ctx, 1));
      Element g2 = mul(gen_y(ctx, 1), gen_mu(ctx, 0));
      const auto mults = default_multipliers(ctx);
      Subspace c1s = ideal_closure(ctx, {g1}, mults);
      Subspace c2s = ideal_closure(ctx, {g1, g2}, mults);
      check_that(c2s.contains(c1s), "closure not monotone in generators");
      check_that(closed_under(c1s, mults), "closure not closed");
      Subspace again = ideal_closure(ctx, c1s.basis_elements(), mults);
      check_that(again == c1s, "closure not idempotent");
      check_that(ideal_closure(ctx, {identity(ctx)}, mults).dim() == ctx.dim,
                 "unit does not generate everything");
      check_that(ideal_closure(ctx, {}, mults).dim() == 0, "empty generators");
      Subspace prod = subspace_product(c1s, c2s);
      check_that(c1s.contains(prod) && c2s.contains(prod), "I J outside I or J");
    });
  }

  return out;
}

}  // namespace hyperalg
