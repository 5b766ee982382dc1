#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "rencontres/characters.hpp"
#include "rencontres/identities.hpp"

using namespace rencontres;

TEST_CASE("the three class functions") {
  CHECK(chi_trivial().poly == IntPoly::constant(1));
  CHECK(chi_permutation().poly == IntPoly::monomial(1));
  CHECK(chi_standard().poly == IntPoly({Int(-1), Int(1)}));
}

TEST_CASE("squared standard character sums to n!") {
  Engine eng;
  const auto small = check_character_norm(eng, 2);
  CHECK(small.ok);
  CHECK(small.lhs == 2);
  CHECK(small.identity == Identity::character_norm);
  REQUIRE(small.params.size() == 1);
  CHECK(small.params[0].first == "n");

  for (long long n = 2; n <= 50; ++n) {
    CAPTURE(n);
    CHECK(check_character_norm(eng, n).ok);
  }
  CHECK_THROWS_AS(check_character_norm(eng, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_character_norm(eng, 0), std::invalid_argument);
}

TEST_CASE("inner products hit the textbook values") {
  Engine eng;
  for (long long n = 2; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(inner_product(eng, n, chi_standard(), chi_standard()) == Rational(1));
    CHECK(inner_product(eng, n, chi_permutation(), chi_permutation()) == Rational(2));
    CHECK(inner_product(eng, n, chi_permutation(), chi_trivial()) == Rational(1));
    CHECK(inner_product(eng, n, chi_trivial(), chi_standard()) == Rational(0));
  }
  for (long long n = 0; n <= 10; ++n) CHECK(inner_product(eng, n, chi_trivial(), chi_trivial()) == Rational(1));
  // at n = 1 the standard character vanishes identically, but the product
  // degree is 2, so the analytic route refuses and defers to the oracle
  CHECK_THROWS_AS(inner_product(eng, 1, chi_standard(), chi_standard()), std::invalid_argument);
  CHECK_THROWS_AS(inner_product(eng, 0, chi_trivial(), chi_standard()), std::invalid_argument);
}

TEST_CASE("inner product is bilinear") {
  Engine eng;
  const FixedPointCharacter a{IntPoly({Int(1), Int(2)})};
  const FixedPointCharacter b{IntPoly({Int(-3), Int(0), Int(1)})};
  const FixedPointCharacter c{IntPoly({Int(0), Int(1), Int(1)})};
  const FixedPointCharacter ab{a.poly + b.poly};
  for (long long n = 4; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(inner_product(eng, n, ab, c) == inner_product(eng, n, a, c) + inner_product(eng, n, b, c));
  }
}

TEST_CASE("permutation character splits as trivial plus standard") {
  Engine eng;
  for (long long n = 2; n <= 20; ++n) {
    const Rational lhs = inner_product(eng, n, chi_permutation(), chi_permutation());
    const Rational rhs = inner_product(eng, n, chi_trivial(), chi_trivial()) +
                         Rational(2) * inner_product(eng, n, chi_trivial(), chi_standard()) +
                         inner_product(eng, n, chi_standard(), chi_standard());
    CAPTURE(n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("irreducibility flag") {
  Engine eng;
  for (long long n = 2; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(irreducibility_of_standard(eng, n));
  }
  CHECK_THROWS_AS(irreducibility_of_standard(eng, 1), std::invalid_argument);
}

TEST_CASE("row averages of polynomial weights are integers") {
  Engine eng;
  CHECK(bell_moment(eng, 6, IntPoly::monomial(3)) == Rational(5));  // B_3
  CHECK(bell_moment(eng, 4, IntPoly::monomial(2)) == Rational(2));  // B_2
  for (const IntPoly& g : default_theorem2_pool()) {
    for (long long n = static_cast<long long>(g.degree()); n <= 12; ++n) {
      const Rational v = bell_moment(eng, n, g);
      CAPTURE(g.str());
      CAPTURE(n);
      CHECK(denominator(v) == 1);
    }
  }
  for (unsigned l = 0; l <= 6; ++l) {
    CHECK(bell_moment(eng, 10, IntPoly::falling_factorial_poly(l)) == Rational(1));
  }
  CHECK_THROWS_AS(bell_moment(eng, 2, IntPoly::monomial(3)), std::invalid_argument);
}
