// Brute-force partition counting, used as independent oracles for the
// generating-function code paths.

#ifndef PENTATAIL_PARTITIONS_HPP
#define PENTATAIL_PARTITIONS_HPP

#include <functional>
#include <span>
#include <vector>

#include "pentatail/series.hpp"

namespace pentatail {

/// Default cap on n for exhaustive enumeration.
inline constexpr int kDefaultEnumerationCap = 40;

/// Coefficient n counts partitions of n with every part in `parts`.
/// Computed by memoised recursion over the largest admissible part.
Series partitions_into(std::span<const int> parts, int order);

/// Calls `visit` once per partition of n (parts in nonincreasing order).
/// Throws LimitExceeded when n > cap.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit,
                        int cap = kDefaultEnumerationCap);

/// Number of partitions of n with no part divisible by d, by enumeration.
Integer count_dregular_bruteforce(int d, int n, int cap = kDefaultEnumerationCap);

}  // namespace pentatail

#endif  // PENTATAIL_PARTITIONS_HPP
