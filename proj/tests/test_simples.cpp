#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hyperalg/simples.hpp"

using namespace hyperalg;

TEST_CASE("small simple modules") {
  AlgebraCtx c = make_ctx(3, 2);

  SimpleModule triv = build_simple(c, 0);
  CHECK(triv.dim == 1);
  for (int i = 0; i < c.r; ++i) {
    CHECK(triv.x_gen[static_cast<size_t>(i)].is_zero());
    CHECK(triv.y_gen[static_cast<size_t>(i)].is_zero());
  }

  SimpleModule nat = build_simple(c, 1);
  CHECK(nat.dim == 2);
  CHECK(nat.x_gen[0].at(0, 1) == 1);  // X^(1) v_1 = v_0
  CHECK(nat.y_gen[0].at(1, 0) == 1);  // Y^(1) v_0 = v_1

  // lambda = p: the Frobenius twist of the natural module
  SimpleModule tw = build_simple(c, 3);
  CHECK(tw.dim == 2);
  CHECK(tw.x_gen[0].is_zero());       // X^(1) acts as zero
  CHECK_FALSE(tw.x_gen[1].is_zero()); // X^(p) acts with rank one
  CHECK(act(gen_x(c, 1), tw).is_zero());
  CHECK_FALSE(act(gen_x(c, 3), tw).is_zero());

  CHECK_THROWS_AS(build_simple(c, 9), std::invalid_argument);
}

TEST_CASE("action is an algebra homomorphism") {
  std::mt19937_64 g(29);
  for (auto [p, r] : {std::pair{2, 2}, {3, 1}}) {
    AlgebraCtx c = make_ctx(p, r);
    std::uniform_int_distribution<int> d(0, static_cast<int>(c.pr) - 1);
    for (const SimpleModule& m : all_simples(c)) {
      CHECK(act(identity(c), m) == MatFp::eye(m.dim));
      // the highest vector of L(lambda) carries weight lambda
      CHECK(m.mu_ind[static_cast<size_t>(m.lambda % c.pr)][0] == 1);
      for (int t = 0; t < 100; ++t) {
        Element x(c), y(c);
        x.add_term(Monomial{d(g), d(g), d(g)}, 1);
        y.add_term(Monomial{d(g), d(g), d(g)}, 1);
        REQUIRE(act(mul(x, y), m) == matmul(act(x, m), act(y, m), p));
      }
    }
  }
}

TEST_CASE("radical oracle dimensions") {
  // dim rad = p^{3r} - sum of squared simple dimensions
  const std::tuple<int, int, int> expected[] = {
      {2, 1, 3}, {3, 1, 13}, {5, 1, 70}, {2, 2, 39}, {2, 3, 387}};
  for (auto [p, r, dim] : expected) {
    AlgebraCtx c = make_ctx(p, r);
    Subspace rad = oracle_radical(c);
    REQUIRE(rad.dim() == dim);
    long long sq = 0;
    for (const SimpleModule& m : all_simples(c)) sq += static_cast<long long>(m.dim) * m.dim;
    REQUIRE(c.dim - rad.dim() == sq);
    REQUIRE(closed_under(rad, default_multipliers(c)));
  }
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(oracle_radical(make_ctx(5, 2)), std::invalid_argument);
}

TEST_CASE("constructed basis against the oracle") {
  const std::tuple<int, int, size_t, size_t> expected[] = {
      {2, 1, 3, 5}, {3, 1, 13, 14}, {2, 2, 39, 25}};
  for (auto [p, r, nrad, nv] : expected) {
    AlgebraCtx c = make_ctx(p, r);
    std::vector<Element> claimed = claimed_radical_basis(c);
    std::vector<Element> vs = v_set(c);
    REQUIRE(claimed.size() == nrad);
    REQUIRE(vs.size() == nv);
    REQUIRE(static_cast<long long>(claimed.size() + vs.size()) == c.dim);

    Subspace rad = oracle_radical(c);
    Subspace span = Subspace::span(c, claimed);
    REQUIRE(span.dim() == static_cast<int>(claimed.size()));
    REQUIRE(span == rad);

    Subspace vspan = Subspace::span(c, vs);
    REQUIRE(vspan.dim() == static_cast<int>(vs.size()));
    REQUIRE(intersect(vspan, rad).dim() == 0);
    REQUIRE(add(vspan, rad).dim() == c.dim);
  }
}

TEST_CASE("cyclic modules generated by the top idempotent refinements") {
  for (auto [p, r] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    AlgebraCtx c = make_ctx(p, r);
    std::vector<SimpleModule> mods = all_simples(c);
    for (const TupleAJ& t : enumerate_tuples(p, r)) {
      const long long lam = lambda_of_tuple(p, t);
      REQUIRE(lam >= 0);
      REQUIRE(lam < c.pr);
      long long want = 1;
      bool all_e = true;
      for (const Pair& q : t) {
        want *= n_bound(p, q, 0) + n_tilde_bound(p, q, 0) + 1;
        all_e = all_e && satisfies_e(p, q);
      }
      REQUIRE(want == mods[static_cast<size_t>(lam)].dim);
      if (all_e) {
        // an honest idempotent hits exactly its own block
        Element b = b_tuple(p, EpsVec(t.size(), 1), t);
        for (const SimpleModule& m : mods)
          REQUIRE(act(b, m).is_zero() == (m.lambda != lam));
      }
    }
  }
}
