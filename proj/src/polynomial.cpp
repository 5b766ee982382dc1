#include "rencontres/polynomial.hpp"

#include <utility>

namespace rencontres {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(std::size_t degree, Int coeff) {
  std::vector<Int> c(degree + 1, Int(0));
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::falling_factorial_poly(unsigned r) {
  IntPoly p = constant(1);
  for (unsigned j = 0; j < r; ++j) {
    p = p * IntPoly({Int(-static_cast<long long>(j)), Int(1)});  // (x - j)
  }
  return p;
}

Int IntPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

Int IntPoly::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Int mag = abs(c);
    if (mag != 1 || d == 0) out += mag.str();
    if (d > 0) {
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace rencontres
