// hyperalg: exact computations in the hyperalgebra of the r-th Frobenius
// kernel of SL_2, with machine verification suites.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hyperalg/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace hyperalg;

struct CommonArgs {
  int p = 2;
  int r = 1;
  bool allow_large = false;
  std::string dump_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--p", args.p, "prime characteristic")->required();
  cmd->add_option("--r", args.r, "Frobenius kernel rank")->required();
  cmd->add_flag("--allow-large", args.allow_large, "lift the p^{3r} <= 1000 budget");
  cmd->add_option("--dump", args.dump_path, "write elements/rows to this path");
}

void write_dump(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open dump path " + path);
  out << content;
}

json details_json(const std::map<std::string, std::string>& details) {
  json d = json::object();
  for (const auto& [k, v] : details) d[k] = v;
  return d;
}

int run_verify(const CommonArgs& args, const std::string& suite, uint64_t seed,
               const std::string& format, const std::vector<int>& nu) {
  AlgebraCtx ctx = make_ctx(args.p, args.r);
  VerifyOptions opts;
  opts.seed = seed;
  opts.allow_large = args.allow_large;
  if (!nu.empty()) {
    if (static_cast<int>(nu.size()) != args.r)
      throw std::runtime_error("--nu needs exactly r entries");
    opts.nu_combos = {nu};
  }
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else
    suites = {suite};
  std::vector<CheckReport> reports = run_suites(suites, ctx, opts);

  bool all_pass = true;
  for (const CheckReport& rep : reports)
    if (rep.status == CheckStatus::fail) all_pass = false;

  if (format == "json") {
    json out;
    out["p"] = args.p;
    out["r"] = args.r;
    out["version"] = kVersion;
    out["seed"] = seed;
    out["checks"] = json::array();
    for (const CheckReport& rep : reports)
      out["checks"].push_back(json{{"name", rep.name},
                                   {"status", to_string(rep.status)},
                                   {"details", details_json(rep.details)},
                                   {"elapsed_ms", rep.elapsed_ms}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CheckReport& rep : reports) {
      const char* tag = rep.status == CheckStatus::pass     ? "PASS"
                        : rep.status == CheckStatus::fail   ? "FAIL"
                                                            : "SKIP";
      std::cout << "[" << tag << "] " << rep.name;
      if (!rep.extra.empty()) std::cout << " (" << rep.extra << ")";
      for (const auto& [k, v] : rep.details) std::cout << "  " << k << "=" << v;
      std::cout << "  (" << rep.elapsed_ms << " ms)\n";
    }
    std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  }
  if (!args.dump_path.empty())
    write_dump(args.dump_path, oracle_radical(ctx, args.allow_large).dump());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the hyperalgebra of (SL_2)_r"};
  app.require_subcommand(1);

  CommonArgs vargs;
  std::string suite = "all", format = "text";
  uint64_t seed = 12345;
  std::vector<int> nu;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, vargs);
  verify->add_option("--suite", suite, "all|idempotents|radical|main|lemmas|props")
      ->check(CLI::IsMember({"all", "idempotents", "radical", "main", "lemmas", "props"}));
  verify->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "seed for randomized property checks");
  verify->add_option("--nu", nu, "comma-separated nu per index, odd p only")
      ->delimiter(',');

  CommonArgs oargs;
  CLI::App* oracle = app.add_subcommand("oracle", "compute rad U_r from the simple modules");
  add_common(oracle, oargs);

  CommonArgs bargs;
  CLI::App* basis = app.add_subcommand("basis", "emit the constructed radical basis elements");
  add_common(basis, bargs);

  CommonArgs sargs;
  CLI::App* socle = app.add_subcommand("socle", "compute the left socle of the regular module");
  add_common(socle, sargs);

  CommonArgs iargs;
  CLI::App* idem = app.add_subcommand("idempotents", "emit the orthogonal idempotents");
  add_common(idem, iargs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(vargs, suite, seed, format, nu);

    if (oracle->parsed()) {
      AlgebraCtx ctx = make_ctx(oargs.p, oargs.r);
      Subspace rad = oracle_radical(ctx, oargs.allow_large);
      std::cout << "dim U_r = " << ctx.dim << ", dim rad = " << rad.dim() << "\n";
      if (!oargs.dump_path.empty()) write_dump(oargs.dump_path, rad.dump());
      return 0;
    }
    if (basis->parsed()) {
      AlgebraCtx ctx = make_ctx(bargs.p, bargs.r);
      std::vector<Element> rows = claimed_radical_basis(ctx);
      std::cout << "constructed radical basis: " << rows.size() << " elements\n";
      if (!bargs.dump_path.empty()) {
        std::string text;
        for (const Element& e : rows) {
          text += to_text(e);
          text += '\n';
        }
        write_dump(bargs.dump_path, text);
      }
      return 0;
    }
    if (socle->parsed()) {
      AlgebraCtx ctx = make_ctx(sargs.p, sargs.r);
      Subspace soc = left_socle(ctx, oracle_radical(ctx, sargs.allow_large));
      std::cout << "dim soc = " << soc.dim() << "\n";
      if (!sargs.dump_path.empty()) write_dump(sargs.dump_path, soc.dump());
      return 0;
    }
    if (idem->parsed()) {
      AlgebraCtx ctx = make_ctx(iargs.p, iargs.r);
      std::string text;
      int count = 0;
      for (const TupleAJ& t : enumerate_tuples(iargs.p, iargs.r)) {
        text += to_text(b_tuple(iargs.p, EpsVec(t.size(), 0), t));
        text += '\n';
        ++count;
      }
      std::cout << count << " orthogonal idempotents\n";
      if (!iargs.dump_path.empty()) write_dump(iargs.dump_path, text);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
