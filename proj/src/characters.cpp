#include "rencontres/characters.hpp"

#include <stdexcept>
#include <string>

namespace rencontres {

FixedPointCharacter chi_trivial() { return {IntPoly::constant(1)}; }
FixedPointCharacter chi_permutation() { return {IntPoly::monomial(1)}; }
FixedPointCharacter chi_standard() { return {IntPoly({Int(-1), Int(1)})}; }

namespace {

// (1/n!) sum_k w(k) f_n(k) over row n.
Rational normalized_row_moment(const Engine& eng, long long n, const IntPoly& w) {
  const RencontresRow row = eng.rencontres_row(n);
  Int acc = 0;
  for (long long k = 0; k <= n; ++k) {
    acc += w(Int(k)) * row.counts[static_cast<std::size_t>(k)];
  }
  return make_rational(acc, eng.factorial(n));
}

}  // namespace

Rational inner_product(const Engine& eng, long long n, const FixedPointCharacter& chi,
                       const FixedPointCharacter& phi) {
  if (n < 0) throw std::invalid_argument("inner_product: n must be nonnegative");
  const IntPoly product = chi.poly * phi.poly;
  if (n < static_cast<long long>(product.degree())) {
    throw std::invalid_argument("inner_product: requires n >= combined character degree, got n=" +
                                std::to_string(n) + ", deg=" + std::to_string(product.degree()));
  }
  return normalized_row_moment(eng, n, product);
}

VerificationReport check_character_norm(const Engine& eng, long long n) {
  if (n < 2) {
    throw std::invalid_argument("check_character_norm: n must be >= 2, got " + std::to_string(n));
  }
  const RencontresRow row = eng.rencontres_row(n);
  Int lhs = 0;
  for (long long k = 0; k <= n; ++k) {
    lhs += int_pow(Int(k) - 1, 2) * row.counts[static_cast<std::size_t>(k)];
  }
  return make_report(Identity::character_norm, {{"n", n}}, std::move(lhs), eng.factorial(n));
}

bool irreducibility_of_standard(const Engine& eng, long long n) {
  if (n < 2) {
    throw std::invalid_argument("irreducibility_of_standard: n must be >= 2, got " + std::to_string(n));
  }
  return inner_product(eng, n, chi_standard(), chi_standard()) == 1;
}

Rational bell_moment(const Engine& eng, long long n, const IntPoly& g) {
  if (n < 0) throw std::invalid_argument("bell_moment: n must be nonnegative");
  if (n < static_cast<long long>(g.degree())) {
    throw std::invalid_argument("bell_moment: requires n >= degree of g, got n=" + std::to_string(n) +
                                ", deg=" + std::to_string(g.degree()));
  }
  return normalized_row_moment(eng, n, g);
}

}  // namespace rencontres
