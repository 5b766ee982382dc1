#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rencontres/bigint.hpp"

namespace rencontres {

enum class Identity {
  easy,
  theorem1,
  lemma2_moment,
  theorem2,
  stirling_expansion,
  recursion,
  binomial_transform,
  character_norm,
};

std::string_view identity_tag(Identity id);

// Parameter assignments in their canonical emission order.
using ParamList = std::vector<std::pair<std::string, long long>>;

// One checked identity instance. ok holds exactly when lhs == rhs; build
// reports through make_report so the invariant cannot drift.
struct VerificationReport {
  Identity identity;
  ParamList params;
  Int lhs;
  Int rhs;
  bool ok;
};

VerificationReport make_report(Identity id, ParamList params, Int lhs, Int rhs);

struct SweepSummary {
  std::size_t total = 0;
  std::vector<VerificationReport> failures;
  bool all_ok() const { return failures.empty(); }
};

// One line, fixed key order, big integers as decimal strings:
// {"identity":...,"params":{...},"lhs":"...","rhs":"...","ok":...}
std::string to_json_line(const VerificationReport& report);

}  // namespace rencontres
