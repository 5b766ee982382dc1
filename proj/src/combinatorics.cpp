#include "rencontres/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rencontres {

Int falling_factorial(const Int& x, long long r) {
  if (r < 0) throw std::invalid_argument("falling_factorial: r must be nonnegative");
  Int acc = 1;
  for (long long i = 0; i < r; ++i) acc *= x - i;
  return acc;
}

Engine::Engine(EngineConfig config) : cache_limit_(std::max<long long>(0, config.cache_limit)) {}

Nat Engine::factorial(long long n) const {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative, got " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mu_);
  return factorial_locked(n);
}

Nat Engine::factorial_locked(long long n) const {
  if (fact_.empty()) fact_.push_back(Nat(1));
  const long long cached_to = std::min(n, cache_limit_);
  while (static_cast<long long>(fact_.size()) <= cached_to) {
    fact_.push_back(fact_.back() * fact_.size());
  }
  if (n <= cache_limit_) return fact_[static_cast<std::size_t>(n)];
  Nat acc = fact_.back();
  for (long long i = static_cast<long long>(fact_.size()); i <= n; ++i) acc *= i;
  return acc;
}

Nat Engine::binomial(long long n, long long m) const {
  // m < 0 is covered by the paper's zero convention for any n; only then is
  // a negative n undefined territory.
  if (m < 0) return 0;
  if (n < 0) throw std::invalid_argument("binomial: n < 0 with m >= 0 is undefined, got n=" + std::to_string(n));
  if (m > n) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  return factorial_locked(n) / (factorial_locked(m) * factorial_locked(n - m));
}

Nat Engine::derangement(long long n) const {
  if (n < 0) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  return derangement_locked(n);
}

// d(n) = sum_{k=0}^n (-1)^k n!/k!, accumulated with the running integer
// quotient q_k = n!/k! (each quotient is integral).
Nat Engine::derangement_locked(long long n) const {
  auto compute = [this](long long v) {
    Int q = factorial_locked(v);
    Int acc = q;
    for (long long k = 1; k <= v; ++k) {
      q /= k;
      if (k % 2 != 0) acc -= q;
      else acc += q;
    }
    return Nat(acc);
  };
  if (n > cache_limit_) return compute(n);
  while (static_cast<long long>(derange_.size()) <= n) {
    derange_.push_back(compute(static_cast<long long>(derange_.size())));
  }
  return derange_[static_cast<std::size_t>(n)];
}

Nat Engine::rencontres_closed(long long n, long long k) const {
  if (n < 0) throw std::invalid_argument("rencontres_closed: n must be nonnegative, got " + std::to_string(n));
  // Out-of-range k vanishes through the binomial and derangement conventions.
  return binomial(n, k) * derangement(n - k);
}

std::vector<Nat> Engine::next_rencontres_row(const std::vector<Nat>& row, long long n) {
  std::vector<Nat> next(static_cast<std::size_t>(n) + 2, Nat(0));
  for (long long k = 0; k <= n + 1; ++k) {
    Nat acc = 0;
    if (k >= 1) acc += row[static_cast<std::size_t>(k - 1)];
    if (k <= n) acc += Nat(n - k) * row[static_cast<std::size_t>(k)];
    if (k + 1 <= n) acc += Nat(k + 1) * row[static_cast<std::size_t>(k + 1)];
    next[static_cast<std::size_t>(k)] = acc;
  }
  return next;
}

RencontresRow Engine::rencontres_row(long long n) const {
  if (n < 0) throw std::invalid_argument("rencontres_row: n must be nonnegative, got " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mu_);
  return RencontresRow{n, rencontres_row_locked(n)};
}

std::vector<Nat> Engine::rencontres_row_locked(long long n) const {
  if (renc_.empty()) renc_.push_back({Nat(1)});
  const long long cached_to = std::min(n, cache_limit_);
  while (static_cast<long long>(renc_.size()) <= cached_to) {
    const long long m = static_cast<long long>(renc_.size()) - 1;
    renc_.push_back(next_rencontres_row(renc_.back(), m));
  }
  if (n <= cache_limit_) return renc_[static_cast<std::size_t>(n)];
  std::vector<Nat> row = renc_.back();
  for (long long m = static_cast<long long>(renc_.size()) - 1; m < n; ++m) {
    row = next_rencontres_row(row, m);
  }
  return row;
}

Nat Engine::stirling2(long long n, long long m) const {
  if (n < 0) throw std::invalid_argument("stirling2: n must be nonnegative, got " + std::to_string(n));
  if (m < 0 || m > n) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  if (n > cache_limit_) return stirling_row_above_limit(n)[static_cast<std::size_t>(m)];
  return stirling_row_locked(n)[static_cast<std::size_t>(m)];
}

// S(n,m) = m S(n-1,m) + S(n-1,m-1), S(0,0) = 1.
static std::vector<Nat> next_stirling_row(const std::vector<Nat>& row) {
  const std::size_t n = row.size();  // new row index
  std::vector<Nat> next(n + 1, Nat(0));
  for (std::size_t m = 1; m <= n; ++m) {
    next[m] = Nat(m) * (m < n ? row[m] : Nat(0)) + row[m - 1];
  }
  return next;
}

const std::vector<Nat>& Engine::stirling_row_locked(long long n) const {
  if (stirling_.empty()) stirling_.push_back({Nat(1)});
  while (static_cast<long long>(stirling_.size()) <= n) {
    stirling_.push_back(next_stirling_row(stirling_.back()));
  }
  return stirling_[static_cast<std::size_t>(n)];
}

std::vector<Nat> Engine::stirling_row_above_limit(long long n) const {
  std::vector<Nat> row = stirling_row_locked(cache_limit_);
  for (long long i = cache_limit_; i < n; ++i) row = next_stirling_row(row);
  return row;
}

Nat Engine::bell(long long n) const {
  if (n < 0) throw std::invalid_argument("bell: n must be nonnegative, got " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mu_);
  auto sum_row = [](const std::vector<Nat>& row) {
    Nat acc = 0;
    for (const Nat& v : row) acc += v;
    return acc;
  };
  if (n > cache_limit_) return sum_row(stirling_row_above_limit(n));
  while (static_cast<long long>(bell_.size()) <= n) {
    bell_.push_back(sum_row(stirling_row_locked(static_cast<long long>(bell_.size()))));
  }
  return bell_[static_cast<std::size_t>(n)];
}

}  // namespace rencontres
