#pragma once

#include <functional>
#include <vector>

#include "rencontres/bigint.hpp"
#include "rencontres/characters.hpp"
#include "rencontres/combinatorics.hpp"
#include "rencontres/polynomial.hpp"

namespace rencontres::oracle {

// Ground truth by exhaustion. Everything here recomputes from the
// definition of a permutation alone; no Engine value ever enters, so
// agreement with the analytic side is evidence, not circularity.

// One-line notation: image[j-1] = sigma(j), a bijection on {1,...,n}.
struct Permutation {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int j) const { return image[static_cast<std::size_t>(j - 1)]; }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
};

Permutation identity_permutation(int n);
long long fixed_points(const Permutation& p);
Permutation invert(const Permutation& p);
// (a o b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);

// 0/1 matrix with entry (i,j) = 1 iff p(j) = i; trace counts fixed points
// and composition maps to matrix product.
class SquareMatrix01 {
 public:
  explicit SquareMatrix01(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, int v) { entries_[index(i, j)] = static_cast<signed char>(v); }
  long long trace() const;
  bool is_permutation_matrix() const;

  friend SquareMatrix01 operator*(const SquareMatrix01& a, const SquareMatrix01& b);
  friend bool operator==(const SquareMatrix01& a, const SquareMatrix01& b) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_;
  std::vector<signed char> entries_;
};

SquareMatrix01 permutation_matrix(const Permutation& p);

struct OracleConfig {
  long long cap = 10;  // largest n enumerate() accepts (10! = 3.6M)
};

// Visits all n! permutations exactly once, in lexicographic order of
// one-line notation. Throws when n exceeds the cap.
void for_each_permutation(long long n, const std::function<void(const Permutation&)>& visit,
                          const OracleConfig& config = {});

// Histogram of fixed points over the full enumeration.
RencontresRow rencontres_row_oracle(long long n, const OracleConfig& config = {});

// sum over S_n of g(fix(sigma)).
Int weighted_sum_oracle(long long n, const IntPoly& g, const OracleConfig& config = {});

// (1/|S_n|) sum_g chi(fix(g)) phi(fix(g^-1)), with the inverse taken
// literally and |S_n| obtained by counting.
Rational inner_product_oracle(long long n, const FixedPointCharacter& chi,
                              const FixedPointCharacter& phi, const OracleConfig& config = {});

}  // namespace rencontres::oracle
