#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hyperalg/belements.hpp"
#include "hyperalg/linalg.hpp"
#include "hyperalg/simples.hpp"

using namespace hyperalg;

TEST_CASE("span basics") {
  AlgebraCtx c2 = make_ctx(2, 1);
  CHECK(Subspace::span(c2, {}).dim() == 0);
  std::vector<Element> all;
  for (long long i = 0; i < c2.dim; ++i) {
    Element e(c2);
    e.add_term(monomial_of_index(c2, i), 1);
    all.push_back(std::move(e));
  }
  Subspace whole = Subspace::span(c2, all);
  CHECK(whole.dim() == c2.dim);
  CHECK(whole.member(identity(c2)));

  Subspace s = Subspace::span(c2, {gen_mu(c2, 0), gen_x(c2, 1)});
  CHECK(s.dim() == 2);
  CHECK(intersect(s, s) == s);
  CHECK(add(s, s) == s);
  CHECK(s.member(gen_mu(c2, 0)));
  CHECK_FALSE(s.member(gen_mu(c2, 1)));
}

TEST_CASE("sum and intersection") {
  AlgebraCtx c3 = make_ctx(3, 1);
  Subspace a = Subspace::span(c3, {gen_mu(c3, 0), gen_mu(c3, 1)});
  Subspace b = Subspace::span(c3, {gen_mu(c3, 1), gen_mu(c3, 2)});
  CHECK(add(a, b).dim() == 3);
  Subspace meet = intersect(a, b);
  CHECK(meet.dim() == 1);
  CHECK(meet.member(gen_mu(c3, 1)));
  // dimension formula on random subspaces
  std::mt19937_64 g(17);
  std::uniform_int_distribution<int> d(0, static_cast<int>(c3.dim) - 1);
  for (int t = 0; t < 20; ++t) {
    std::vector<Element> ga, gb;
    for (int i = 0; i < 5; ++i) {
      Element x(c3), y(c3);
      x.add_term(monomial_of_index(c3, d(g)), 1 + (i % 2));
      y.add_term(monomial_of_index(c3, d(g)), 1);
      y.add_term(monomial_of_index(c3, d(g)), 2);
      ga.push_back(std::move(x));
      gb.push_back(std::move(y));
    }
    Subspace sa = Subspace::span(c3, ga), sb = Subspace::span(c3, gb);
    REQUIRE(add(sa, sb).dim() + intersect(sa, sb).dim() == sa.dim() + sb.dim());
  }
}

TEST_CASE("echelon form is canonical") {
  AlgebraCtx c3 = make_ctx(3, 1);
  std::mt19937_64 g(23);
  std::uniform_int_distribution<int> d(0, static_cast<int>(c3.dim) - 1);
  for (int t = 0; t < 10; ++t) {
    std::vector<Element> gens;
    for (int i = 0; i < 6; ++i) {
      Element e(c3);
      e.add_term(monomial_of_index(c3, d(g)), 1);
      e.add_term(monomial_of_index(c3, d(g)), 2);
      gens.push_back(std::move(e));
    }
    Subspace s1 = Subspace::span(c3, gens);
    std::shuffle(gens.begin(), gens.end(), g);
    Subspace s2 = Subspace::span(c3, gens);
    REQUIRE(s1 == s2);
    REQUIRE(s1.rows() == s2.rows());
  }
}

TEST_CASE("ideal closure") {
  AlgebraCtx c3 = make_ctx(3, 1);
  const auto mults = default_multipliers(c3);
  CHECK(ideal_closure(c3, {identity(c3)}, mults).dim() == c3.dim);
  CHECK(ideal_closure(c3, {}, mults).dim() == 0);

  // h(1,0) 2X^(2) and 2Y^(2) h(1,0) generate a 13-dimensional ideal
  Element h = h_elem(c3, 1, 0);
  Element g1 = mul(h, elem_pow(gen_x(c3, 1), 2));
  Element g2 = mul(elem_pow(gen_y(c3, 1), 2), h);
  CHECK(g1 == mul(h, scale(gen_x(c3, 2), 2)));
  Subspace closure = ideal_closure(c3, {g1, g2}, mults);
  CHECK(closure.dim() == 13);
  CHECK(closed_under(closure, mults));
  CHECK(closure == oracle_radical(c3));

  // monotone and idempotent
  Subspace one = ideal_closure(c3, {g1}, mults);
  CHECK(closure.contains(one));
  CHECK(ideal_closure(c3, one.basis_elements(), mults) == one);
}

TEST_CASE("products and nilpotency") {
  AlgebraCtx c2 = make_ctx(2, 1);
  Subspace zero(c2);
  auto nr = nilpotency_index(zero);
  CHECK(nr.nilpotent);
  CHECK(nr.index == 1);

  Subspace s = Subspace::span(c2, {mul(gen_mu(c2, 0), gen_x(c2, 1))});
  CHECK(subspace_product(s, s).dim() == 0);
  nr = nilpotency_index(s);
  CHECK(nr.nilpotent);
  CHECK(nr.index == 2);

  Subspace rad = oracle_radical(c2);
  nr = nilpotency_index(rad);
  CHECK(nr.nilpotent);
  CHECK(nr.index == 3);

  // a non-nilpotent subspace is reported, not thrown
  nr = nilpotency_index(Subspace::span(c2, {gen_mu(c2, 0)}));
  CHECK_FALSE(nr.nilpotent);

  // products of ideals land in both factors
  AlgebraCtx c3 = make_ctx(3, 1);
  const auto mults = default_multipliers(c3);
  Subspace i1 = ideal_closure(c3, {mul(gen_mu(c3, 0), gen_x(c3, 1))}, mults);
  Subspace i2 = ideal_closure(c3, {mul(gen_y(c3, 1), gen_mu(c3, 0))}, mults);
  Subspace prod = subspace_product(i1, i2);
  CHECK(i1.contains(prod));
  CHECK(i2.contains(prod));
}

TEST_CASE("left socle") {
  AlgebraCtx c2 = make_ctx(2, 1);
  Subspace soc = left_socle(c2, oracle_radical(c2));
  CHECK(soc.dim() == 5);
  Element X = gen_x(c2, 1), Y = gen_y(c2, 1);
  std::vector<Element> listed = {mul(gen_mu(c2, 0), mul(X, Y)), mul(gen_mu(c2, 1), mul(Y, X)),
                                 mul(gen_mu(c2, 1), X), mul(gen_mu(c2, 1), mul(X, Y)),
                                 mul(gen_mu(c2, 1), Y)};
  CHECK(Subspace::span(c2, listed) == soc);

  // zero radical annihilates nothing: the socle is everything
  CHECK(left_socle(c2, Subspace(c2)).dim() == c2.dim);

  // counting identity at (3,1) and (2,2)
  for (auto [p, r] : {std::pair{3, 1}, {2, 2}}) {
    AlgebraCtx c = make_ctx(p, r);
    Subspace s = left_socle(c, oracle_radical(c));
    long long want = 0;
    for (const TupleAJ& t : enumerate_tuples(p, r)) {
      long long box = 1;
      for (const Pair& q : t) box *= n_bound(p, q, 0) + n_tilde_bound(p, q, 0) + 1;
      want += box;
    }
    REQUIRE(s.dim() == want);
  }
}

TEST_CASE("subspace dump format") {
  AlgebraCtx c2 = make_ctx(2, 1);
  CHECK(oracle_radical(c2).dump() ==
        "1*Y(0).mu(0).X(1)\n1*Y(1).mu(0).X(0)\n1*Y(1).mu(0).X(1)\n");
  // rows parse back to elements spanning the same space
  Subspace rad = oracle_radical(c2);
  std::vector<Element> parsed;
  std::istringstream in(rad.dump());
  std::string line;
  while (std::getline(in, line)) parsed.push_back(parse_element(c2, line));
  CHECK(Subspace::span(c2, parsed) == rad);
}

TEST_CASE("context mismatch") {
  AlgebraCtx c2 = make_ctx(2, 1), c3 = make_ctx(3, 1);
  Subspace s(c2);
  CHECK_THROWS_AS(s.member(identity(c3)), std::invalid_argument);
  CHECK_THROWS_AS(add(Subspace(c2), Subspace(c3)), std::invalid_argument);
}
