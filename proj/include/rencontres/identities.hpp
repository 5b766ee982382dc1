#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rencontres/combinatorics.hpp"
#include "rencontres/polynomial.hpp"
#include "rencontres/report.hpp"

namespace rencontres {

// Each check evaluates the two sides of one identity by independent code
// paths that share only the Engine primitives; nothing is simplified before
// comparison. Sums run over the printed bounds and rely on the zero
// conventions rather than skipping terms.

// sum_{k=0}^n C(n,k) d(k)  vs  n!
VerificationReport check_easy(const Engine& eng, long long n);

// sum_{k=0}^n C(n-l,k-l) d(n-k)  vs  (n-l)!   (0 on both sides when l > n)
VerificationReport check_theorem1(const Engine& eng, long long n, long long l);

// F(n,t) = sum_k [k]_{t+1} f_n(k), computed from the rencontres row.
// Requires t >= -1.
Int factorial_moment(const Engine& eng, long long n, long long t);

// F(n,t)  vs  n! when n >= t+1, else 0.
VerificationReport check_lemma2(const Engine& eng, long long n, long long t);

// sum_{k=0}^n g(k) C(n,k) d(n-k)  vs  (sum_i a_i B_i) n!.
// Requires n >= deg(g).
VerificationReport check_theorem2(const Engine& eng, long long n, const IntPoly& g);

// Same two sides as check_theorem2 but with no degree requirement and no
// claim of equality; lets callers gather evidence below the hypothesis.
VerificationReport theorem2_both_sides(const Engine& eng, long long n, const IntPoly& g);

// x^n  vs  sum_{m=0}^n S(n,m) [x]_m
VerificationReport check_stirling_expansion(const Engine& eng, long long n, const Int& x);

// Recursion-built row n against the closed form, one report per k.
// Requires n >= 1.
SweepSummary check_recursion(const Engine& eng, long long n,
                             const std::function<void(const VerificationReport&)>& on_report = {});

// [k]_l C(n,k)  vs  [n]_l C(n-l,k-l)
VerificationReport check_binomial_transform(const Engine& eng, long long n, long long k, long long l);

// Inclusive parameter range.
struct ParamRange {
  long long lo = 0;
  long long hi = 0;
};

// Cartesian sweep over named ranges, deterministically ordered. Range names
// per identity: easy/recursion/character_norm use "n"; theorem1 "n","l";
// lemma2_moment "n","t"; stirling_expansion "n","x"; binomial_transform
// "n","k","l"; theorem2 uses "n" plus a polynomial pool (grid points with
// n < deg(g) are skipped, mirroring the theorem's hypothesis).
struct SweepSpec {
  Identity identity = Identity::easy;
  std::map<std::string, ParamRange> ranges;
  std::vector<IntPoly> pool;  // theorem2 only
};

using ReportSink = std::function<void(const VerificationReport&)>;

// Runs the sweep, invoking the sink on every report in grid order.
// Throws std::invalid_argument on malformed ranges or domain violations
// (checked up front, before anything is emitted).
SweepSummary run_sweep(const Engine& eng, const SweepSpec& spec, const ReportSink& sink = {});

// The fixed theorem2 pool: monomials k^i for i <= 6, (k-1)^2, 3k^3 - 2k + 7,
// and the monomial expansions of [k]_l for l <= 6.
std::vector<IntPoly> default_theorem2_pool();

// Seeded pool for randomized theorem2 sweeps: `count` polynomials of degree
// <= max_degree with coefficients in [-9, 9], leading coefficient nonzero.
// Identical seeds give identical pools on every platform.
std::vector<IntPoly> random_theorem2_pool(unsigned long long seed, std::size_t count = 8,
                                          unsigned max_degree = 4);

}  // namespace rencontres
