#include "rencontres/identities.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "rencontres/characters.hpp"

namespace rencontres {

namespace {

void require_nonneg(long long v, const char* what) {
  if (v < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(v));
  }
}

}  // namespace

VerificationReport check_easy(const Engine& eng, long long n) {
  require_nonneg(n, "check_easy: n");
  Int lhs = 0;
  for (long long k = 0; k <= n; ++k) {
    lhs += eng.binomial(n, k) * eng.derangement(k);
  }
  return make_report(Identity::easy, {{"n", n}}, std::move(lhs), eng.factorial(n));
}

VerificationReport check_theorem1(const Engine& eng, long long n, long long l) {
  require_nonneg(n, "check_theorem1: n");
  require_nonneg(l, "check_theorem1: l");
  Int lhs = 0;
  for (long long k = 0; k <= n; ++k) {
    lhs += eng.binomial(n - l, k - l) * eng.derangement(n - k);
  }
  Int rhs = l <= n ? Int(eng.factorial(n - l)) : Int(0);
  return make_report(Identity::theorem1, {{"n", n}, {"l", l}}, std::move(lhs), std::move(rhs));
}

Int factorial_moment(const Engine& eng, long long n, long long t) {
  require_nonneg(n, "factorial_moment: n");
  if (t < -1) {
    throw std::invalid_argument("factorial_moment: t must be >= -1, got " + std::to_string(t));
  }
  const RencontresRow row = eng.rencontres_row(n);
  Int acc = 0;
  for (long long k = 0; k <= n; ++k) {
    acc += falling_factorial(Int(k), t + 1) * row.counts[static_cast<std::size_t>(k)];
  }
  return acc;
}

VerificationReport check_lemma2(const Engine& eng, long long n, long long t) {
  Int lhs = factorial_moment(eng, n, t);
  Int rhs = n >= t + 1 ? Int(eng.factorial(n)) : Int(0);
  return make_report(Identity::lemma2_moment, {{"n", n}, {"t", t}}, std::move(lhs), std::move(rhs));
}

VerificationReport theorem2_both_sides(const Engine& eng, long long n, const IntPoly& g) {
  require_nonneg(n, "theorem2: n");
  Int lhs = 0;
  for (long long k = 0; k <= n; ++k) {
    lhs += g(Int(k)) * eng.binomial(n, k) * eng.derangement(n - k);
  }
  Int bell_weighted = 0;
  for (std::size_t i = 0; i <= g.degree(); ++i) {
    bell_weighted += g.coefficient(i) * eng.bell(static_cast<long long>(i));
  }
  Int rhs = bell_weighted * eng.factorial(n);
  return make_report(Identity::theorem2, {{"n", n}}, std::move(lhs), std::move(rhs));
}

VerificationReport check_theorem2(const Engine& eng, long long n, const IntPoly& g) {
  require_nonneg(n, "check_theorem2: n");
  if (n < static_cast<long long>(g.degree())) {
    throw std::invalid_argument("check_theorem2: requires n >= degree of g, got n=" + std::to_string(n) +
                                ", deg=" + std::to_string(g.degree()) + " (g = " + g.str() + ")");
  }
  return theorem2_both_sides(eng, n, g);
}

VerificationReport check_stirling_expansion(const Engine& eng, long long n, const Int& x) {
  require_nonneg(n, "check_stirling_expansion: n");
  Int lhs = int_pow(x, static_cast<unsigned long long>(n));
  Int rhs = 0;
  for (long long m = 0; m <= n; ++m) {
    rhs += eng.stirling2(n, m) * falling_factorial(x, m);
  }
  return make_report(Identity::stirling_expansion, {{"n", n}, {"x", x.convert_to<long long>()}},
                     std::move(lhs), std::move(rhs));
}

SweepSummary check_recursion(const Engine& eng, long long n,
                             const std::function<void(const VerificationReport&)>& on_report) {
  if (n < 1) {
    throw std::invalid_argument("check_recursion: n must be positive, got " + std::to_string(n));
  }
  SweepSummary summary;
  const RencontresRow row = eng.rencontres_row(n);
  for (long long k = 0; k <= n; ++k) {
    auto report = make_report(Identity::recursion, {{"n", n}, {"k", k}},
                              Int(row.counts[static_cast<std::size_t>(k)]), Int(eng.rencontres_closed(n, k)));
    ++summary.total;
    if (!report.ok) summary.failures.push_back(report);
    if (on_report) on_report(report);
  }
  return summary;
}

VerificationReport check_binomial_transform(const Engine& eng, long long n, long long k, long long l) {
  require_nonneg(n, "check_binomial_transform: n");
  require_nonneg(k, "check_binomial_transform: k");
  require_nonneg(l, "check_binomial_transform: l");
  Int lhs = falling_factorial(Int(k), l) * eng.binomial(n, k);
  // [n]_l = 0 settles the right side before the binomial's upper index can
  // go negative with k - l >= 0.
  Int n_falling = falling_factorial(Int(n), l);
  Int rhs = n_falling == 0 ? Int(0) : n_falling * eng.binomial(n - l, k - l);
  return make_report(Identity::binomial_transform, {{"n", n}, {"k", k}, {"l", l}},
                     std::move(lhs), std::move(rhs));
}

namespace {

const ParamRange& named_range(const SweepSpec& spec, const std::string& name) {
  auto it = spec.ranges.find(name);
  if (it == spec.ranges.end()) {
    throw std::invalid_argument("sweep: missing range \"" + name + "\" for identity " +
                                std::string(identity_tag(spec.identity)));
  }
  return it->second;
}

void validate_ranges(const SweepSpec& spec, std::initializer_list<const char*> names) {
  for (const auto& [name, range] : spec.ranges) {
    bool known = false;
    for (const char* expected : names) known = known || name == expected;
    if (!known) {
      throw std::invalid_argument("sweep: unexpected range \"" + name + "\" for identity " +
                                  std::string(identity_tag(spec.identity)));
    }
  }
  for (const char* name : names) {
    const ParamRange& r = named_range(spec, name);
    if (r.lo > r.hi) {
      throw std::invalid_argument("sweep: malformed range \"" + std::string(name) + "\": " +
                                  std::to_string(r.lo) + ".." + std::to_string(r.hi));
    }
  }
}

void require_lo(const SweepSpec& spec, const char* name, long long min, const char* why) {
  if (named_range(spec, name).lo < min) {
    throw std::invalid_argument("sweep: range \"" + std::string(name) + "\" must start at " +
                                std::to_string(min) + " or above for " +
                                std::string(identity_tag(spec.identity)) + " (" + why + ")");
  }
}

}  // namespace

SweepSummary run_sweep(const Engine& eng, const SweepSpec& spec, const ReportSink& sink) {
  SweepSummary summary;
  auto emit = [&](VerificationReport report) {
    ++summary.total;
    if (!report.ok) summary.failures.push_back(report);
    if (sink) sink(report);
  };

  switch (spec.identity) {
    case Identity::easy: {
      validate_ranges(spec, {"n"});
      require_lo(spec, "n", 0, "n is a count");
      const ParamRange n = named_range(spec, "n");
      for (long long i = n.lo; i <= n.hi; ++i) emit(check_easy(eng, i));
      break;
    }
    case Identity::theorem1: {
      validate_ranges(spec, {"n", "l"});
      require_lo(spec, "n", 0, "n is a count");
      require_lo(spec, "l", 0, "l is a count");
      const ParamRange n = named_range(spec, "n"), l = named_range(spec, "l");
      for (long long i = n.lo; i <= n.hi; ++i)
        for (long long j = l.lo; j <= l.hi; ++j) emit(check_theorem1(eng, i, j));
      break;
    }
    case Identity::lemma2_moment: {
      validate_ranges(spec, {"n", "t"});
      require_lo(spec, "n", 0, "n is a count");
      require_lo(spec, "t", -1, "the moment is defined for t >= -1");
      const ParamRange n = named_range(spec, "n"), t = named_range(spec, "t");
      for (long long i = n.lo; i <= n.hi; ++i)
        for (long long j = t.lo; j <= t.hi; ++j) emit(check_lemma2(eng, i, j));
      break;
    }
    case Identity::theorem2: {
      validate_ranges(spec, {"n"});
      require_lo(spec, "n", 0, "n is a count");
      if (spec.pool.empty()) {
        throw std::invalid_argument("sweep: theorem2 requires a polynomial pool");
      }
      const ParamRange n = named_range(spec, "n");
      for (long long i = n.lo; i <= n.hi; ++i) {
        for (std::size_t p = 0; p < spec.pool.size(); ++p) {
          if (i < static_cast<long long>(spec.pool[p].degree())) continue;
          VerificationReport report = check_theorem2(eng, i, spec.pool[p]);
          report.params.emplace_back("poly", static_cast<long long>(p));
          emit(std::move(report));
        }
      }
      break;
    }
    case Identity::stirling_expansion: {
      validate_ranges(spec, {"n", "x"});
      require_lo(spec, "n", 0, "n is an exponent");
      const ParamRange n = named_range(spec, "n"), x = named_range(spec, "x");
      for (long long i = n.lo; i <= n.hi; ++i)
        for (long long j = x.lo; j <= x.hi; ++j) emit(check_stirling_expansion(eng, i, Int(j)));
      break;
    }
    case Identity::recursion: {
      validate_ranges(spec, {"n"});
      require_lo(spec, "n", 1, "row 0 has no predecessor");
      const ParamRange n = named_range(spec, "n");
      for (long long i = n.lo; i <= n.hi; ++i) {
        SweepSummary rows = check_recursion(eng, i, sink);
        summary.total += rows.total;
        for (auto& f : rows.failures) summary.failures.push_back(std::move(f));
      }
      break;
    }
    case Identity::binomial_transform: {
      validate_ranges(spec, {"n", "k", "l"});
      require_lo(spec, "n", 0, "n is a count");
      require_lo(spec, "k", 0, "k is a count");
      require_lo(spec, "l", 0, "l is a count");
      const ParamRange n = named_range(spec, "n"), k = named_range(spec, "k"), l = named_range(spec, "l");
      for (long long i = n.lo; i <= n.hi; ++i)
        for (long long j = k.lo; j <= k.hi; ++j)
          for (long long m = l.lo; m <= l.hi; ++m) emit(check_binomial_transform(eng, i, j, m));
      break;
    }
    case Identity::character_norm: {
      validate_ranges(spec, {"n"});
      require_lo(spec, "n", 2, "the squared standard character needs n >= 2");
      const ParamRange n = named_range(spec, "n");
      for (long long i = n.lo; i <= n.hi; ++i) emit(check_character_norm(eng, i));
      break;
    }
  }
  return summary;
}

std::vector<IntPoly> default_theorem2_pool() {
  std::vector<IntPoly> pool;
  for (std::size_t i = 0; i <= 6; ++i) pool.push_back(IntPoly::monomial(i));
  pool.push_back(IntPoly({Int(1), Int(-2), Int(1)}));        // (k-1)^2
  pool.push_back(IntPoly({Int(7), Int(-2), Int(0), Int(3)})); // 3k^3 - 2k + 7
  for (unsigned l = 0; l <= 6; ++l) pool.push_back(IntPoly::falling_factorial_poly(l));
  return pool;
}

std::vector<IntPoly> random_theorem2_pool(unsigned long long seed, std::size_t count,
                                          unsigned max_degree) {
  // Raw engine outputs reduced by modulus, so the pool is identical across
  // standard libraries, not just across runs.
  std::mt19937_64 rng(seed);
  std::vector<IntPoly> pool;
  pool.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned degree = static_cast<unsigned>(rng() % (max_degree + 1));
    std::vector<Int> coeffs(degree + 1);
    for (unsigned d = 0; d < degree; ++d) {
      coeffs[d] = static_cast<long long>(rng() % 19) - 9;  // [-9, 9]
    }
    const long long lead = static_cast<long long>(rng() % 18);
    coeffs[degree] = lead < 9 ? lead - 9 : lead - 8;  // [-9, 9] \ {0}
    pool.push_back(IntPoly(std::move(coeffs)));
  }
  return pool;
}

}  // namespace rencontres
