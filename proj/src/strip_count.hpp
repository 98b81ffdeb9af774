#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rectcount::detail {

// counts[n] for n = 0..n_max: number of multisets of 1xk blocks with k in
// [1, max_part] and total 2n that tile the 2xn strip.  vertical_domino
// enables the one-vertical-1x2 rescue; it is ignored when max_part < 2.
//
// The enumeration streams partitions of 2n grouped by their head (the parts
// >= 3, generated by DFS with an incremental subset-sum bit vector); the 2s
// and 1s tail is closed out in O(1) per head from the head's nearest
// achievable sums around every midpoint.  Memory stays at one bitset stack.
//
// Counts are 64-bit; callers keep n_max within the range where the result
// is bounded away from 2^63 (p(2 n_max) for the unrestricted case).
std::vector<std::uint64_t> strip_tileable_counts(std::size_t n_max, std::uint32_t max_part,
                                                 bool vertical_domino, int jobs);

// R(N, a): partitions of N with no sub-multiset sum equal to a (0 <= a <= N).
std::uint64_t no_subsum_count(std::uint32_t N, std::uint32_t a);

}  // namespace rectcount::detail
