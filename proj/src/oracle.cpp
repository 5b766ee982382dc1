#include "rencontres/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rencontres::oracle {

Permutation identity_permutation(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 1);
  return p;
}

long long fixed_points(const Permutation& p) {
  long long count = 0;
  for (int j = 1; j <= p.size(); ++j) {
    if (p(j) == j) ++count;
  }
  return count;
}

Permutation invert(const Permutation& p) {
  Permutation q;
  q.image.resize(p.image.size());
  for (int j = 1; j <= p.size(); ++j) {
    q.image[static_cast<std::size_t>(p(j) - 1)] = j;
  }
  return q;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c;
  c.image.resize(a.image.size());
  for (int j = 1; j <= a.size(); ++j) {
    c.image[static_cast<std::size_t>(j - 1)] = a(b(j));
  }
  return c;
}

long long SquareMatrix01::trace() const {
  long long acc = 0;
  for (int i = 0; i < n_; ++i) acc += at(i, i);
  return acc;
}

bool SquareMatrix01::is_permutation_matrix() const {
  for (int i = 0; i < n_; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != 0 && at(i, j) != 1) return false;
      row += at(i, j);
      col += at(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

SquareMatrix01 operator*(const SquareMatrix01& a, const SquareMatrix01& b) {
  SquareMatrix01 c(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    for (int j = 0; j < a.n_; ++j) {
      int acc = 0;
      for (int k = 0; k < a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
      c.set(i, j, acc);
    }
  }
  return c;
}

SquareMatrix01 permutation_matrix(const Permutation& p) {
  SquareMatrix01 m(p.size());
  for (int j = 1; j <= p.size(); ++j) {
    m.set(p(j) - 1, j - 1, 1);
  }
  return m;
}

void for_each_permutation(long long n, const std::function<void(const Permutation&)>& visit,
                          const OracleConfig& config) {
  if (n < 0) throw std::invalid_argument("for_each_permutation: n must be nonnegative");
  if (n > config.cap) {
    throw std::invalid_argument("for_each_permutation: n=" + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(config.cap));
  }
  Permutation p = identity_permutation(static_cast<int>(n));
  do {
    visit(p);
  } while (std::next_permutation(p.image.begin(), p.image.end()));
}

RencontresRow rencontres_row_oracle(long long n, const OracleConfig& config) {
  RencontresRow row{n, std::vector<Nat>(static_cast<std::size_t>(n) + 1, Nat(0))};
  for_each_permutation(n, [&](const Permutation& p) {
    ++row.counts[static_cast<std::size_t>(fixed_points(p))];
  }, config);
  return row;
}

Int weighted_sum_oracle(long long n, const IntPoly& g, const OracleConfig& config) {
  Int acc = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    acc += g(Int(fixed_points(p)));
  }, config);
  return acc;
}

Rational inner_product_oracle(long long n, const FixedPointCharacter& chi,
                              const FixedPointCharacter& phi, const OracleConfig& config) {
  Int acc = 0;
  Int group_order = 0;  // counted, not computed
  for_each_permutation(n, [&](const Permutation& p) {
    acc += chi.poly(Int(fixed_points(p))) * phi.poly(Int(fixed_points(invert(p))));
    ++group_order;
  }, config);
  return make_rational(acc, group_order);
}

}  // namespace rencontres::oracle
