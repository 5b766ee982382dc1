#pragma once

// Set partitions counted the slow way, by walking every restricted growth
// string: a_0 = 0 and a_i <= 1 + max(a_0..a_{i-1}). Strings are in bijection
// with partitions of an n-set, and the largest label determines the block
// count. Independent of the engine on purpose.

#include <cstddef>
#include <vector>

#include "rencontres/bigint.hpp"

namespace testsupport {

inline void count_rgs(int i, int n, int mx, std::vector<rencontres::Nat>& blocks) {
  if (i == n) {
    blocks[static_cast<std::size_t>(mx) + 1] += 1;
    return;
  }
  for (int v = 0; v <= mx + 1; ++v) count_rgs(i + 1, n, v > mx ? v : mx, blocks);
}

// blocks[m] = partitions of an n-set into exactly m nonempty blocks.
inline std::vector<rencontres::Nat> partition_counts(int n) {
  std::vector<rencontres::Nat> blocks(static_cast<std::size_t>(n) + 1, rencontres::Nat(0));
  if (n == 0) {
    blocks[0] = 1;  // the empty partition
    return blocks;
  }
  count_rgs(1, n, 0, blocks);
  return blocks;
}

}  // namespace testsupport
