#pragma once

#include <mutex>
#include <vector>

#include "rencontres/bigint.hpp"

namespace rencontres {

// Row n of the rencontres triangle: counts[k] permutations of {1,...,n}
// fix exactly k points. Entries sum to n!; counts[n-1] = 0 for n >= 1.
struct RencontresRow {
  long long n = 0;
  std::vector<Nat> counts;  // size n+1
};

// [x]_r = x(x-1)...(x-r+1), with [x]_0 = 1.
Int falling_factorial(const Int& x, long long r);

struct EngineConfig {
  // Largest n whose values are memoized. Larger inputs are still answered
  // exactly, just recomputed per call from the cached prefix.
  long long cache_limit = 1000;
};

// Exact integer sequences: factorials, binomial coefficients, derangements,
// Stirling set numbers, Bell numbers and rencontres rows.
//
// Conventions, applied in this order by binomial():
//   C(n,m) = 0 for m < 0 (any n), and for m > n >= 0;
//   C(n,m) with n < 0 and m >= 0 is rejected (undefined here).
// d(n) = 0 for n < 0, d(0) = 1.
//
// A single instance may be shared across threads; the caches are guarded.
class Engine {
 public:
  explicit Engine(EngineConfig config = {});

  Nat factorial(long long n) const;
  Nat binomial(long long n, long long m) const;
  Nat derangement(long long n) const;
  // C(n,k) * d(n-k); 0 when k < 0 or k > n.
  Nat rencontres_closed(long long n, long long k) const;
  // Row n built iteratively from f_0 = (1) via the three-term recursion
  // f_{n+1}(k) = f_n(k-1) + (n-k) f_n(k) + (k+1) f_n(k+1).
  RencontresRow rencontres_row(long long n) const;
  Nat stirling2(long long n, long long m) const;
  Nat bell(long long n) const;

 private:
  Nat factorial_locked(long long n) const;
  Nat derangement_locked(long long n) const;
  const std::vector<Nat>& stirling_row_locked(long long n) const;
  std::vector<Nat> stirling_row_above_limit(long long n) const;
  std::vector<Nat> rencontres_row_locked(long long n) const;
  static std::vector<Nat> next_rencontres_row(const std::vector<Nat>& row, long long n);

  long long cache_limit_;
  mutable std::mutex mu_;
  mutable std::vector<Nat> fact_;                  // fact_[i] = i!
  mutable std::vector<Nat> derange_;               // derange_[i] = d(i)
  mutable std::vector<std::vector<Nat>> stirling_; // stirling_[n][m], row size n+1
  mutable std::vector<Nat> bell_;
  mutable std::vector<std::vector<Nat>> renc_;     // rencontres rows
};

}  // namespace rencontres
