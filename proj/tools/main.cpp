#include <cstdlib>
#include <iostream>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rencontres/characters.hpp"
#include "rencontres/combinatorics.hpp"
#include "rencontres/identities.hpp"
#include "rencontres/oracle.hpp"
#include "rencontres/report.hpp"

namespace {

using namespace rencontres;

ParamRange parse_range(const std::string& name, const std::string& text) {
  static const std::regex form(R"((-?\d+)(?:\.\.(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) {
    throw std::invalid_argument("--" + name + ": expected a value or inclusive range a..b, got \"" + text + "\"");
  }
  ParamRange r;
  r.lo = std::stoll(m[1].str());
  r.hi = m[2].matched ? std::stoll(m[2].str()) : r.lo;
  if (r.lo > r.hi) {
    throw std::invalid_argument("--" + name + ": range is empty: " + text);
  }
  return r;
}

IntPoly parse_poly(const std::string& text) {
  static const std::regex coeff_form(R"(-?\d+)");
  std::vector<Int> coeffs;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (!std::regex_match(token, coeff_form)) {
      throw std::invalid_argument("--poly: bad coefficient \"" + token + "\" in \"" + text + "\"");
    }
    coeffs.push_back(Int(token));
  }
  if (coeffs.empty() || text.back() == ',') {
    throw std::invalid_argument("--poly: expected comma-separated coefficients a0,a1,...,am");
  }
  return IntPoly(std::move(coeffs));
}

long long oracle_cap_from_env() {
  const char* raw = std::getenv("RENCONTRES_ORACLE_CAP");
  if (raw == nullptr) return oracle::OracleConfig{}.cap;
  try {
    std::size_t used = 0;
    const long long cap = std::stoll(raw, &used);
    if (used != std::string(raw).size() || cap < 0) throw std::invalid_argument(raw);
    return cap;
  } catch (const std::exception&) {
    throw std::invalid_argument("RENCONTRES_ORACLE_CAP: expected a nonnegative integer, got \"" +
                                std::string(raw) + "\"");
  }
}

struct VerifyPlan {
  Identity identity;
  std::vector<std::string> range_flags;
};

const std::map<std::string, VerifyPlan>& verify_plans() {
  static const std::map<std::string, VerifyPlan> plans = {
      {"easy", {Identity::easy, {"n"}}},
      {"theorem1", {Identity::theorem1, {"n", "l"}}},
      {"lemma2", {Identity::lemma2_moment, {"n", "t"}}},
      {"theorem2", {Identity::theorem2, {"n"}}},
      {"stirling", {Identity::stirling_expansion, {"n", "x"}}},
      {"recursion", {Identity::recursion, {"n"}}},
      {"transform", {Identity::binomial_transform, {"n", "k", "l"}}},
      {"character-norm", {Identity::character_norm, {"n"}}},
  };
  return plans;
}

struct VerifyArgs {
  std::string identity;
  std::map<std::string, std::string> ranges;  // flag name -> raw range text
  std::string poly;
  unsigned long long seed = 0;
  bool seed_given = false;
  std::size_t pool_size = 8;
  bool pool_size_given = false;
};

int run_verify(const VerifyArgs& args) {
  const auto plan = verify_plans().find(args.identity);
  if (plan == verify_plans().end()) {
    throw std::invalid_argument("unknown identity \"" + args.identity +
                                "\"; expected one of easy, theorem1, lemma2, theorem2, stirling, "
                                "recursion, transform, character-norm");
  }
  SweepSpec spec;
  spec.identity = plan->second.identity;
  for (const auto& [flag, text] : args.ranges) {
    spec.ranges[flag] = parse_range(flag, text);
  }
  const bool is_theorem2 = spec.identity == Identity::theorem2;
  if (!is_theorem2 && (!args.poly.empty() || args.seed_given || args.pool_size_given)) {
    throw std::invalid_argument("--poly/--seed/--pool-size apply to theorem2 only");
  }
  if (is_theorem2) {
    if (!args.poly.empty() && args.seed_given) {
      throw std::invalid_argument("give either --poly or --seed, not both");
    }
    if (args.pool_size_given && !args.seed_given) {
      throw std::invalid_argument("--pool-size needs --seed");
    }
    if (!args.poly.empty()) spec.pool = {parse_poly(args.poly)};
    else if (args.seed_given) spec.pool = random_theorem2_pool(args.seed, args.pool_size);
    else spec.pool = default_theorem2_pool();
  }

  Engine engine;
  const SweepSummary summary = run_sweep(engine, spec, [](const VerificationReport& report) {
    std::cout << to_json_line(report) << '\n';
  });
  return summary.all_ok() ? 0 : 1;
}

int run_table(const std::string& kind, long long n_max) {
  if (n_max < 0) throw std::invalid_argument("--n-max must be nonnegative");
  Engine engine;
  if (kind == "derangements") {
    std::cout << "n,d\n";
    for (long long n = 0; n <= n_max; ++n) std::cout << n << ',' << engine.derangement(n).str() << '\n';
  } else if (kind == "bell") {
    std::cout << "n,b\n";
    for (long long n = 0; n <= n_max; ++n) std::cout << n << ',' << engine.bell(n).str() << '\n';
  } else if (kind == "stirling") {
    std::cout << "n,m,s\n";
    for (long long n = 0; n <= n_max; ++n)
      for (long long m = 0; m <= n; ++m)
        std::cout << n << ',' << m << ',' << engine.stirling2(n, m).str() << '\n';
  } else if (kind == "rencontres") {
    std::cout << "n,k,f\n";
    for (long long n = 0; n <= n_max; ++n) {
      const RencontresRow row = engine.rencontres_row(n);
      for (long long k = 0; k <= n; ++k)
        std::cout << n << ',' << k << ',' << row.counts[static_cast<std::size_t>(k)].str() << '\n';
    }
  } else {
    throw std::invalid_argument("unknown table \"" + kind +
                                "\"; expected derangements, bell, stirling or rencontres");
  }
  return 0;
}

// Polynomials compared against the enumeration; degree <= 4 keeps full
// sweeps over S_n quick.
std::vector<IntPoly> oracle_compare_pool() {
  std::vector<IntPoly> pool;
  for (std::size_t i = 0; i <= 4; ++i) pool.push_back(IntPoly::monomial(i));
  pool.push_back(IntPoly({Int(1), Int(-2), Int(1)}));  // (k-1)^2
  return pool;
}

int run_oracle_compare(long long n_max) {
  if (n_max < 0) throw std::invalid_argument("--n-max must be nonnegative");
  const oracle::OracleConfig config{oracle_cap_from_env()};
  if (n_max > config.cap) {
    throw std::invalid_argument("--n-max " + std::to_string(n_max) + " exceeds enumeration cap " +
                                std::to_string(config.cap) +
                                " (override with RENCONTRES_ORACLE_CAP)");
  }

  Engine engine;
  bool all_ok = true;
  auto emit = [&all_ok](const std::string& check, std::vector<std::pair<std::string, long long>> params,
                        const std::string& lhs, const std::string& rhs) {
    nlohmann::ordered_json j;
    j["check"] = check;
    auto p = nlohmann::ordered_json::object();
    for (const auto& [name, value] : params) p[name] = value;
    j["params"] = std::move(p);
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    const bool ok = lhs == rhs;
    j["ok"] = ok;
    all_ok = all_ok && ok;
    std::cout << j.dump() << '\n';
  };

  const std::vector<IntPoly> pool = oracle_compare_pool();
  const std::vector<std::pair<FixedPointCharacter, FixedPointCharacter>> pairs = {
      {chi_standard(), chi_standard()},
      {chi_permutation(), chi_permutation()},
      {chi_permutation(), chi_trivial()},
  };

  for (long long n = 0; n <= n_max; ++n) {
    const RencontresRow enumerated = oracle::rencontres_row_oracle(n, config);
    const RencontresRow recursive = engine.rencontres_row(n);
    Nat enumerated_total = 0;
    for (long long k = 0; k <= n; ++k) {
      const Nat& seen = enumerated.counts[static_cast<std::size_t>(k)];
      enumerated_total += seen;
      emit("row_closed", {{"n", n}, {"k", k}}, seen.str(), engine.rencontres_closed(n, k).str());
      emit("row_recursive", {{"n", n}, {"k", k}}, seen.str(),
           recursive.counts[static_cast<std::size_t>(k)].str());
    }
    emit("derangement", {{"n", n}}, enumerated.counts[0].str(), engine.derangement(n).str());
    emit("total", {{"n", n}}, enumerated_total.str(), engine.factorial(n).str());
    for (std::size_t p = 0; p < pool.size(); ++p) {
      emit("weighted_sum", {{"n", n}, {"poly", static_cast<long long>(p)}},
           oracle::weighted_sum_oracle(n, pool[p], config).str(),
           theorem2_both_sides(engine, n, pool[p]).lhs.str());
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& [chi, phi] = pairs[p];
      if (n < static_cast<long long>((chi.poly * phi.poly).degree())) continue;
      emit("inner_product", {{"n", n}, {"pair", static_cast<long long>(p)}},
           rational_str(oracle::inner_product_oracle(n, chi, phi, config)),
           rational_str(inner_product(engine, n, chi, phi)));
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact derangement/rencontres toolkit: verifies fixed-point identities, "
      "prints sequence tables and cross-checks a brute-force S_n oracle.\n"
      "Ranges are inclusive: --n 0..40 or --n 5. Output is JSON lines for\n"
      "verify/oracle-compare and CSV for table; big integers are always\n"
      "decimal strings. Exit codes: 0 ok, 1 failed instance, 2 usage error."};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check one identity over a parameter sweep, one JSON line per instance");
  verify->add_option("identity", verify_args.identity,
                     "easy | theorem1 | lemma2 | theorem2 | stirling | recursion | transform | "
                     "character-norm")->required();
  std::map<std::string, std::string> range_text;
  for (const char* flag : {"n", "l", "t", "x", "k"}) {
    verify->add_option("--" + std::string(flag), range_text[flag],
                       "inclusive range for " + std::string(flag) + " (a..b or a)");
  }
  verify->add_option("--poly", verify_args.poly,
                     "theorem2 weight polynomial, coefficients a0,a1,...,am");
  verify->add_option("--seed", verify_args.seed,
                     "derive the theorem2 polynomial pool from this seed instead of the built-in pool");
  verify->add_option("--pool-size", verify_args.pool_size, "seeded pool size (default 8)");

  std::string table_kind;
  long long table_n_max = 0;
  auto* table = app.add_subcommand("table", "Print a sequence table as CSV");
  table->add_option("kind", table_kind, "derangements | bell | stirling | rencontres")->required();
  table->add_option("--n-max", table_n_max, "largest n to print")->required();

  long long compare_n_max = 0;
  auto* compare = app.add_subcommand(
      "oracle-compare",
      "Recompute rows, derangements, weighted sums and inner products by full enumeration of S_n "
      "and compare against the closed forms (cap 10, override with RENCONTRES_ORACLE_CAP)");
  compare->add_option("--n-max", compare_n_max, "compare all n up to this bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      for (auto& [flag, text] : range_text) {
        if (!text.empty()) verify_args.ranges[flag] = text;
      }
      verify_args.seed_given = verify->count("--seed") > 0;
      verify_args.pool_size_given = verify->count("--pool-size") > 0;
      return run_verify(verify_args);
    }
    if (table->parsed()) return run_table(table_kind, table_n_max);
    return run_oracle_compare(compare_n_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
