#pragma once

#include <vector>

#include "schurpair/abelian.hpp"

namespace schurpair {

inline constexpr int kDefaultPartitionCap = 64;

/// All partitions of n, each descending, in reverse lexicographic order:
/// 4 -> [4], [3,1], [2,2], [2,1,1], [1,1,1,1]. Throws CapExceeded above cap.
std::vector<Partition> partitions_of(int n, int cap = kDefaultPartitionCap);

}  // namespace schurpair
