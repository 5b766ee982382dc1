#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rencontres/bigint.hpp"

namespace rencontres {

// Integer-coefficient polynomial a_0 + a_1 x + ... + a_m x^m.
//
// Coefficients are stored low-to-high with trailing zeros trimmed, so the
// zero polynomial has an empty list. Its degree is 0 with a_0 = 0, which is
// the convention the Bell-weighted sums rely on.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(std::size_t degree, Int coeff = 1);
  // Expansion of x(x-1)...(x-r+1) into monomials; r = 0 gives the constant 1.
  static IntPoly falling_factorial_poly(unsigned r);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  Int coefficient(std::size_t i) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }

  // Exact evaluation (Horner).
  Int operator()(const Int& x) const;

  std::string str(const std::string& var = "k") const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace rencontres
