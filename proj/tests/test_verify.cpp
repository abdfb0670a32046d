#include <catch2/catch_amalgamated.hpp>

#include "hyperalg/verify.hpp"

using namespace hyperalg;

namespace {

int fails(const std::vector<CheckReport>& reports) {
  int n = 0;
  for (const CheckReport& r : reports)
    if (r.status == CheckStatus::fail) ++n;
  return n;
}

const CheckReport& find(const std::vector<CheckReport>& reports, const std::string& name) {
  for (const CheckReport& r : reports)
    if (r.name == name) return r;
  throw std::runtime_error("missing report " + name);
}

}  // namespace

TEST_CASE("idempotent suite") {
  VerifyOptions opts;
  auto r21 = verify_idempotents(make_ctx(2, 1), opts);
  CHECK(fails(r21) == 0);
  CHECK(find(r21, "idempotents/orthogonal_sum").details.at("count") == "3");
  auto r31 = verify_idempotents(make_ctx(3, 1), opts);
  CHECK(fails(r31) == 0);
  CHECK(find(r31, "idempotents/orthogonal_sum").details.at("count") == "6");
  auto r32 = verify_idempotents(make_ctx(3, 2), opts);
  CHECK(fails(r32) == 0);
  CHECK(find(r32, "idempotents/orthogonal_sum").details.at("count") == "36");
  // the large prime square is gated
  auto r52 = verify_idempotents(make_ctx(5, 2), opts);
  CHECK(r52.size() == 1);
  CHECK(r52[0].status == CheckStatus::skipped);
}

TEST_CASE("radical suite") {
  VerifyOptions opts;
  auto rep = verify_radical_basis(make_ctx(2, 1), opts);
  CHECK(fails(rep) == 0);
  CHECK(find(rep, "radical/oracle").details.at("dim") == "3");
  CHECK(find(rep, "radical/socle").details.at("dim") == "5");
  rep = verify_radical_basis(make_ctx(3, 1), opts);
  CHECK(fails(rep) == 0);
  CHECK(find(rep, "radical/oracle").details.at("dim") == "13");
}

TEST_CASE("main theorem suite") {
  VerifyOptions opts;
  auto rep = verify_main_theorem(make_ctx(2, 1), opts);
  CHECK(fails(rep) == 0);
  CHECK(find(rep, "main/closure_equals_radical").details.at("closure_dim") == "3");
  rep = verify_main_theorem(make_ctx(3, 1), opts);
  CHECK(fails(rep) == 0);
  CHECK(find(rep, "main/closure_equals_radical").details.at("closure_dim") == "13");
  rep = verify_main_theorem(make_ctx(5, 1), opts);
  CHECK(fails(rep) == 0);
  // both nu choices run and agree with the radical
  int closure_checks = 0;
  for (const CheckReport& r : rep)
    if (r.name == "main/closure_equals_radical") {
      ++closure_checks;
      CHECK(r.details.at("closure_dim") == "70");
    }
  CHECK(closure_checks == 2);
  // explicit nu override
  opts.nu_combos = {{2}};
  rep = verify_main_theorem(make_ctx(5, 1), opts);
  CHECK(fails(rep) == 0);
  CHECK(find(rep, "main/closure_equals_radical").extra == "nu=2");
}

TEST_CASE("lemma suite") {
  VerifyOptions opts;
  CHECK(fails(verify_lemma_suite(make_ctx(2, 1), opts)) == 0);
  CHECK(fails(verify_lemma_suite(make_ctx(3, 1), opts)) == 0);
}

TEST_CASE("property suite and the p=2 twist anomaly") {
  VerifyOptions opts;
  auto rep = verify_prop_suite(make_ctx(3, 1), opts);
  CHECK(fails(rep) == 0);

  // At p = 2 every check passes except the literal negation form of the
  // twist identity, which the corrected swap version replaces.
  rep = verify_prop_suite(make_ctx(2, 1), opts);
  CHECK(fails(rep) == 1);
  CHECK(find(rep, "props/b_tuple_twist_negation").status == CheckStatus::fail);
  CHECK(find(rep, "props/b_tuple_twist").status == CheckStatus::pass);
}

TEST_CASE("reports are reproducible for a fixed seed") {
  VerifyOptions opts;
  opts.seed = 987654321;
  auto a = run_suites({"idempotents", "main"}, make_ctx(3, 1), opts);
  auto b = run_suites({"idempotents", "main"}, make_ctx(3, 1), opts);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].extra == b[i].extra);
    CHECK(a[i].details == b[i].details);  // elapsed_ms may differ; details not
  }
}

TEST_CASE("report structure") {
  VerifyOptions opts;
  auto rep = verify_radical_basis(make_ctx(2, 1), opts);
  for (const CheckReport& r : rep) {
    CHECK(!r.name.empty());
    CHECK(r.p == 2);
    CHECK(r.r == 1);
    CHECK(r.elapsed_ms >= 0);
  }
  // a failed check carries a concrete counterexample or mismatch
  FaultInjectionGuard guard;
  auto bad = verify_radical_basis(make_ctx(2, 1), opts);
  bool saw_fail = false;
  for (const CheckReport& r : bad)
    if (r.status == CheckStatus::fail) {
      saw_fail = true;
      CHECK((r.details.count("counterexample") || r.details.count("error")));
    }
  CHECK(saw_fail);
}

TEST_CASE("fault injection is detected by several suites") {
  VerifyOptions opts;
  const std::vector<std::string> names{"idempotents", "radical", "main", "lemmas", "props"};
  AlgebraCtx ctx = make_ctx(3, 1);
  {
    FaultInjectionGuard guard;
    auto reports = run_suites(names, ctx, opts);
    CHECK(count_failed_suites(reports) >= 3);
  }
  // and the clean run is clean again afterwards
  auto reports = run_suites(names, ctx, opts);
  CHECK(count_failed_suites(reports) == 0);
}
