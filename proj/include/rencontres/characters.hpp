#pragma once

#include "rencontres/bigint.hpp"
#include "rencontres/combinatorics.hpp"
#include "rencontres/polynomial.hpp"
#include "rencontres/report.hpp"

namespace rencontres {

// A class function on the symmetric group given as a polynomial in the
// number of fixed points: evaluating poly at k gives the character value on
// every permutation with exactly k fixed points. Covers the trivial,
// permutation and standard characters (1, k, k-1) and their sums/products.
struct FixedPointCharacter {
  IntPoly poly;
};

FixedPointCharacter chi_trivial();      // constant 1
FixedPointCharacter chi_permutation();  // k
FixedPointCharacter chi_standard();     // k - 1

// (1/n!) sum_k f_n(k) chi(k) phi(k), exact. Valid because these characters
// are real-valued and a permutation and its inverse fix the same points;
// the inverting variant lives in the oracle as an independent check.
// Requires n >= deg(chi.poly * phi.poly); below that, use the oracle.
Rational inner_product(const Engine& eng, long long n, const FixedPointCharacter& chi,
                       const FixedPointCharacter& phi);

// sum_{k=0}^n (k-1)^2 f_n(k)  vs  n!. Requires n >= 2.
VerificationReport check_character_norm(const Engine& eng, long long n);

// True iff <chi_standard, chi_standard> = 1. Requires n >= 2 (at n = 1 the
// standard character vanishes identically and the norm is 0).
bool irreducibility_of_standard(const Engine& eng, long long n);

// (1/n!) sum_k g(k) f_n(k) as an exact rational. The value collapses to the
// Bell-weighted coefficient sum of g, so integrality is a checked property,
// not an assumption. Requires n >= deg(g).
Rational bell_moment(const Engine& eng, long long n, const IntPoly& g);

}  // namespace rencontres
