#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "support/cli_runner.hpp"

using testsupport::count_lines;
using testsupport::run_cli;

TEST_CASE("verify easy over a range") {
  const auto r = run_cli("verify easy --n 0..50");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 51);
  CHECK(r.out.rfind(R"({"identity":"easy","params":{"n":0},"lhs":"1","rhs":"1","ok":true})" "\n", 0) == 0);
  CHECK(r.out.find("\"ok\":false") == std::string::npos);
}

TEST_CASE("single values act as one-point ranges") {
  const auto r = run_cli("verify theorem1 --n 5 --l 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"identity":"theorem1","params":{"n":5,"l":2},"lhs":"6","rhs":"6","ok":true})" "\n");
}

TEST_CASE("negative range endpoints parse") {
  const auto r = run_cli("verify lemma2 --n 0..10 --t=-1..12");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 11 * 14);
  CHECK(r.out.find("\"t\":-1") != std::string::npos);
  CHECK(r.out.find("\"ok\":false") == std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("verify nonsense --n 1").exit_code == 2);
  CHECK(run_cli("verify easy").exit_code == 2);               // missing --n
  CHECK(run_cli("verify easy --n 3..1").exit_code == 2);      // empty range
  CHECK(run_cli("verify easy --n abc").exit_code == 2);
  CHECK(run_cli("verify easy --n 1..2..3").exit_code == 2);
  CHECK(run_cli("verify easy --n 0..5 --t 1").exit_code == 2);  // stray range
  CHECK(run_cli("verify easy --n 0..5 --poly 1,2").exit_code == 2);
  CHECK(run_cli("verify lemma2 --n 0..5 --t=-2..3").exit_code == 2);  // t below -1
  CHECK(run_cli("verify recursion --n 0..5").exit_code == 2);
  CHECK(run_cli("verify character-norm --n 1..5").exit_code == 2);
  CHECK(run_cli("table nonsense --n-max 3").exit_code == 2);
  CHECK(run_cli("table bell").exit_code == 2);                // missing --n-max
  CHECK(run_cli("table bell --n-max -1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("theorem2 weight selection") {
  const auto one = run_cli("verify theorem2 --n 5 --poly 1,-2,1");
  CHECK(one.exit_code == 0);
  CHECK(one.out ==
        R"({"identity":"theorem2","params":{"n":5,"poly":0},"lhs":"120","rhs":"120","ok":true})" "\n");

  const auto pool = run_cli("verify theorem2 --n 0..8");
  CHECK(pool.exit_code == 0);
  CHECK(pool.out.find("\"ok\":false") == std::string::npos);
  // 16 built-in weights, each contributing the n with deg(g) <= n <= 8:
  // degrees 0..6,2,3,0..6 give 9+8+7+6+5+4+3 +7 +6 +9+8+7+6+5+4+3 = 97 lines
  CHECK(count_lines(pool.out) == 97);

  const auto s1 = run_cli("verify theorem2 --n 0..10 --seed 42");
  const auto s2 = run_cli("verify theorem2 --n 0..10 --seed 42");
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s2.out);
  const auto s3 = run_cli("verify theorem2 --n 0..10 --seed 43");
  CHECK(s3.exit_code == 0);
  CHECK(s1.out != s3.out);
  const auto sized = run_cli("verify theorem2 --n 6..6 --seed 9 --pool-size 3");
  CHECK(sized.exit_code == 0);
  CHECK(count_lines(sized.out) == 3);

  CHECK(run_cli("verify theorem2 --n 5 --poly 1,2 --seed 1").exit_code == 2);
  CHECK(run_cli("verify theorem2 --n 5 --pool-size 3").exit_code == 2);
  CHECK(run_cli("verify theorem2 --n 5 --poly").exit_code == 2);
  CHECK(run_cli("verify theorem2 --n 5 --poly 1,,2").exit_code == 2);
  CHECK(run_cli("verify theorem2 --n 5 --poly 1,x").exit_code == 2);
}

TEST_CASE("big coefficients stay exact end to end") {
  const auto r = run_cli("verify theorem2 --n 3 --poly 1000000000000000000000000000000");
  CHECK(r.exit_code == 0);
  // constant weight c: both sides are c * n! = 6e30
  CHECK(r.out.find("\"lhs\":\"6000000000000000000000000000000\"") != std::string::npos);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("character norm sweep") {
  const auto r = run_cli("verify character-norm --n 2..30");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 29);
  CHECK(r.out.find("\"ok\":false") == std::string::npos);
}

TEST_CASE("recursion sweep emits one line per row entry") {
  const auto r = run_cli("verify recursion --n 1..5");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 2 + 3 + 4 + 5 + 6);
}

TEST_CASE("tables") {
  const auto d = run_cli("table derangements --n-max 6");
  CHECK(d.exit_code == 0);
  CHECK(d.out == "n,d\n0,1\n1,0\n2,1\n3,2\n4,9\n5,44\n6,265\n");

  const auto b = run_cli("table bell --n-max 5");
  CHECK(b.exit_code == 0);
  CHECK(b.out == "n,b\n0,1\n1,1\n2,2\n3,5\n4,15\n5,52\n");

  const auto s = run_cli("table stirling --n-max 4");
  CHECK(s.exit_code == 0);
  CHECK(count_lines(s.out) == 1 + (1 + 2 + 3 + 4 + 5));
  CHECK(s.out.rfind("n,m,s\n0,0,1\n1,0,0\n1,1,1\n", 0) == 0);
  CHECK(s.out.find("\n4,2,7\n") != std::string::npos);

  const auto f = run_cli("table rencontres --n-max 0");
  CHECK(f.exit_code == 0);
  CHECK(f.out == "n,k,f\n0,0,1\n");

  const auto f4 = run_cli("table rencontres --n-max 4");
  CHECK(f4.exit_code == 0);
  CHECK(f4.out.find("\n4,0,9\n4,1,8\n4,2,6\n4,3,0\n4,4,1\n") != std::string::npos);
}

TEST_CASE("oracle comparison subcommand") {
  const auto r = run_cli("oracle-compare --n-max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ok\":false") == std::string::npos);
  for (const char* check : {"row_closed", "row_recursive", "derangement", "total", "weighted_sum", "inner_product"}) {
    CAPTURE(check);
    CHECK(r.out.find(std::string("\"check\":\"") + check + "\"") != std::string::npos);
  }

  CHECK(run_cli("oracle-compare --n-max 99").exit_code == 2);
  CHECK(run_cli("oracle-compare --n-max 4", "RENCONTRES_ORACLE_CAP=3 ").exit_code == 2);
  CHECK(run_cli("oracle-compare --n-max 4", "RENCONTRES_ORACLE_CAP=4 ").exit_code == 0);
  CHECK(run_cli("oracle-compare --n-max 2", "RENCONTRES_ORACLE_CAP=banana ").exit_code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* args : {"verify theorem2 --n 0..10", "table rencontres --n-max 8",
                           "oracle-compare --n-max 4", "verify transform --n 0..6 --k 0..8 --l 0..4"}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CAPTURE(args);
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == first.exit_code);
    CHECK(first.out == second.out);
  }
}
