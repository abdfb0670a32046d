#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hyperalg/hyperalgebra.hpp"

using namespace hyperalg;

namespace {

Element mono(const AlgebraCtx& ctx, int m, int a, int mp) {
  Element e(ctx);
  e.add_term(Monomial{m, a, mp}, 1);
  return e;
}

Monomial random_monomial(std::mt19937_64& g, const AlgebraCtx& ctx) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(ctx.pr) - 1);
  return Monomial{d(g), d(g), d(g)};
}

}  // namespace

TEST_CASE("context construction") {
  AlgebraCtx c = make_ctx(3, 2);
  CHECK(c.pr == 9);
  CHECK(c.dim == 729);
  CHECK_THROWS_AS(make_ctx(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_ctx(3, 0), std::invalid_argument);
}

TEST_CASE("product expansions") {
  AlgebraCtx c2 = make_ctx(2, 1);
  // X^(1) Y^(1) = sum_a Y^(1) mu_a X^(1) + mu_1
  Element got = mul(gen_x(c2, 1), gen_y(c2, 1));
  Element want = add(add(mono(c2, 1, 0, 1), mono(c2, 1, 1, 1)), gen_mu(c2, 1));
  CHECK(got == want);
  CHECK(mul(gen_x(c2, 1), gen_x(c2, 1)).is_zero());

  AlgebraCtx c3 = make_ctx(3, 1);
  CHECK(mul(gen_x(c3, 1), gen_x(c3, 1)) == scale(gen_x(c3, 2), 2));

  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Element prod = mul(gen_mu(c3, a), gen_mu(c3, b));
      if (a == b)
        CHECK(prod == gen_mu(c3, a));
      else
        CHECK(prod.is_zero());
    }
}

TEST_CASE("generators") {
  AlgebraCtx c2 = make_ctx(2, 1);
  CHECK(gen_binom_h(c2, 1) == gen_mu(c2, 1));
  AlgebraCtx c3 = make_ctx(3, 1);
  CHECK(gen_mu(c3, 0) == gen_mu(c3, 3));
  CHECK(gen_mu(c3, -1) == gen_mu(c3, 2));
  Element one = identity(c3);
  for (long long i = 0; i < c3.dim; ++i) {
    Element e(c3);
    e.add_term(monomial_of_index(c3, i), 1);
    CHECK(mul(one, e) == e);
    CHECK(mul(e, one) == e);
  }
  CHECK_THROWS_AS(gen_x(c3, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_binom_h(c3, -1), std::invalid_argument);
}

TEST_CASE("associativity") {
  AlgebraCtx c2 = make_ctx(2, 1);
  for (long long i = 0; i < c2.dim; ++i)
    for (long long j = 0; j < c2.dim; ++j)
      for (long long k = 0; k < c2.dim; ++k) {
        Element x(c2), y(c2), z(c2);
        x.add_term(monomial_of_index(c2, i), 1);
        y.add_term(monomial_of_index(c2, j), 1);
        z.add_term(monomial_of_index(c2, k), 1);
        REQUIRE(mul(mul(x, y), z) == mul(x, mul(y, z)));
      }
  std::mt19937_64 g(7);
  for (auto [p, r] : {std::pair{3, 1}, {2, 2}}) {
    AlgebraCtx c = make_ctx(p, r);
    for (int t = 0; t < 200; ++t) {
      Element x(c), y(c), z(c);
      x.add_term(random_monomial(g, c), 1);
      y.add_term(random_monomial(g, c), 1);
      z.add_term(random_monomial(g, c), 1);
      REQUIRE(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
  }
}

TEST_CASE("twist maps") {
  AlgebraCtx c3 = make_ctx(3, 1);
  for (int m = 0; m < 3; ++m) {
    CHECK(t1(gen_x(c3, m)) == scale(gen_y(c3, m), m % 2 ? -1 : 1));
    CHECK(t2(gen_x(c3, m)) == scale(gen_x(c3, m), m % 2 ? -1 : 1));
  }
  std::mt19937_64 g(11);
  for (int t = 0; t < 100; ++t) {
    Element e(c3);
    for (int k = 0; k < 3; ++k) e.add_term(random_monomial(g, c3), 1 + (k % 2));
    REQUIRE(t1(t1(e)) == e);
    REQUIRE(t2(t2(e)) == e);
  }
  for (int a = 0; a < 3; ++a) {
    CHECK(t1(gen_mu(c3, a)) == gen_mu(c3, -a));
    CHECK(t2(gen_mu(c3, a)) == gen_mu(c3, -a));
  }
}

TEST_CASE("Frobenius maps") {
  for (int p : {2, 3}) {
    AlgebraCtx big = make_ctx(p, 2);
    CHECK(fr(gen_x(big, p)) == gen_x(big, 1));
    CHECK(fr(gen_x(big, 1)).is_zero());
    CHECK(fr(identity(big)) == identity(big));

    AlgebraCtx small = make_ctx(p, 1);
    CHECK(fr_prime(identity(small)) == identity(big));
    // Fr o Fr' is the inclusion on one-sided monomials
    for (int a = 0; a < p; ++a)
      for (int mp = 0; mp < p; ++mp) {
        Element e = mono(small, 0, a, mp);
        REQUIRE(fr(fr_prime(e)) == embed(e, 2));
      }
  }
  AlgebraCtx c2 = make_ctx(2, 1), b2 = make_ctx(2, 2);
  CHECK(fr_prime(gen_mu(c2, 1)) == add(gen_mu(b2, 2), gen_mu(b2, 3)));
}

TEST_CASE("embeddings") {
  AlgebraCtx c2 = make_ctx(2, 1), b2 = make_ctx(2, 2);
  CHECK(embed(gen_mu(c2, 0), 2) == add(gen_mu(b2, 0), gen_mu(b2, 2)));
  CHECK(embed(identity(c2), 2) == identity(b2));
  CHECK_THROWS_AS(embed(identity(c2), 1), std::invalid_argument);
  std::mt19937_64 g(3);
  AlgebraCtx c3 = make_ctx(3, 1);
  for (int t = 0; t < 100; ++t) {
    Element x(c3), y(c3);
    x.add_term(random_monomial(g, c3), 1);
    y.add_term(random_monomial(g, c3), 2);
    REQUIRE(embed(mul(x, y), 2) == mul(embed(x, 2), embed(y, 2)));
  }
}

TEST_CASE("weights, grading, degree-zero subalgebra") {
  AlgebraCtx c3 = make_ctx(3, 1);
  for (int a = 0; a < 3; ++a)
    CHECK(weight_of(gen_mu(c3, a)) == std::optional<long long>(a));
  CHECK(!weight_of(gen_x(c3, 1)).has_value());
  CHECK(weight_of(mul(gen_mu(c3, 2), gen_x(c3, 1))) == std::optional<long long>(2));
  CHECK(is_in_ar(mul(gen_y(c3, 1), gen_x(c3, 1))));
  CHECK(is_in_ar(identity(c3)));
  CHECK(!is_in_ar(gen_x(c3, 1)));

  Element e = add(gen_x(c3, 1), scale(gen_y(c3, 2), 2));
  auto split = degree_split(e);
  CHECK(split.size() == 2);
  CHECK(split.at(1) == gen_x(c3, 1));
  CHECK(split.at(-2) == scale(gen_y(c3, 2), 2));
}

TEST_CASE("commutation with the degree-zero subalgebra") {
  for (int p : {2, 3}) {
    AlgebraCtx c1 = make_ctx(p, 1), big = make_ctx(p, 2);
    for (int n = 1; n < p; ++n) {
      Element xl = gen_x(big, p * n), yl = gen_y(big, p * n);
      for (int m = 0; m < p; ++m)
        for (int a = 0; a < p; ++a) {
          Element be = embed(mono(c1, m, a, m), 2);
          REQUIRE(mul(xl, be) == mul(be, xl));
          REQUIRE(mul(yl, be) == mul(be, yl));
        }
    }
  }
}

TEST_CASE("rank-one times twisted image spans everything") {
  AlgebraCtx c1 = make_ctx(2, 1), c2 = make_ctx(2, 2);
  std::vector<std::vector<uint8_t>> rows;
  std::map<long long, std::vector<uint8_t>> pivots;
  // gather the 64 products and row-reduce by hand
  std::vector<Element> prods;
  for (long long i = 0; i < c1.dim; ++i)
    for (long long j = 0; j < c1.dim; ++j) {
      Element u(c1), v(c1);
      u.add_term(monomial_of_index(c1, i), 1);
      v.add_term(monomial_of_index(c1, j), 1);
      prods.push_back(mul(embed(u, 2), fr_prime(v)));
    }
  // rank over F_2
  std::vector<std::vector<int>> mat;
  for (const Element& e : prods) {
    std::vector<int> row(static_cast<size_t>(c2.dim), 0);
    for (const auto& [M, c] : e.terms())
      row[static_cast<size_t>(monomial_index(c2, M))] = c;
    mat.push_back(std::move(row));
  }
  int rank = 0;
  for (size_t col = 0; col < static_cast<size_t>(c2.dim); ++col) {
    size_t piv = static_cast<size_t>(-1);
    for (size_t i = static_cast<size_t>(rank); i < mat.size(); ++i)
      if (mat[i][col]) {
        piv = i;
        break;
      }
    if (piv == static_cast<size_t>(-1)) continue;
    std::swap(mat[static_cast<size_t>(rank)], mat[piv]);
    for (size_t i = 0; i < mat.size(); ++i)
      if (i != static_cast<size_t>(rank) && mat[i][col])
        for (size_t j = 0; j < static_cast<size_t>(c2.dim); ++j)
          mat[i][j] = (mat[i][j] + mat[static_cast<size_t>(rank)][j]) % 2;
    ++rank;
  }
  CHECK(rank == c2.dim);
}

TEST_CASE("text format round trip") {
  AlgebraCtx c2 = make_ctx(2, 1);
  CHECK(to_text(mul(gen_x(c2, 1), gen_y(c2, 1))) ==
        "1*Y(0).mu(1).X(0) + 1*Y(1).mu(0).X(1) + 1*Y(1).mu(1).X(1)");
  CHECK(to_text(identity(c2)) == "1*Y(0).mu(0).X(0) + 1*Y(0).mu(1).X(0)");
  CHECK(to_text(Element(c2)) == "0");
  CHECK(parse_element(c2, "0").is_zero());

  std::mt19937_64 g(5);
  AlgebraCtx c3 = make_ctx(3, 2);
  for (int t = 0; t < 50; ++t) {
    Element e(c3);
    for (int k = 0; k < 4; ++k) e.add_term(random_monomial(g, c3), 1 + k % 2);
    REQUIRE(parse_element(c3, to_text(e)) == e);
  }
  CHECK_THROWS_AS(parse_element(c3, "garbage"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(c3, "1*Y(9).mu(0).X(0)"), std::invalid_argument);
}

TEST_CASE("context mismatch is rejected") {
  AlgebraCtx c2 = make_ctx(2, 1), c3 = make_ctx(3, 1);
  CHECK_THROWS_AS(mul(identity(c2), identity(c3)), std::invalid_argument);
  CHECK_THROWS_AS(add(identity(c2), identity(c3)), std::invalid_argument);
}
