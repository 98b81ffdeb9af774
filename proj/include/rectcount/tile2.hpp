#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rectcount/natural.hpp"
#include "rectcount/partcore.hpp"

namespace rectcount::tile2 {

// Achievable sub-multiset sums of a partition, as a bit vector over
// [0, total].  Bit 0 and bit total are always set and the profile is
// symmetric: s is achievable iff total - s is.
struct SubsumProfile {
  partcore::Partition partition;
  std::vector<bool> achievable;  // indexed 0..total

  bool has(std::size_t sum) const {
    return sum < achievable.size() && achievable[sum];
  }
};

SubsumProfile make_subsum_profile(const partcore::Partition& p);

// A multiset M of 1xk block lengths with sum 2n tiles the 2xn strip iff
//   (a) M has a sub-multiset summing to n (two horizontal rows), or
//   (b) M contains a 2 and M minus one copy of 2 has a sub-multiset summing
//       to n-1 (a single vertical domino; two or more rotate to horizontal).
bool tiles_strip(std::span<const std::uint32_t> parts, std::size_t n,
                 bool allow_vertical_domino = true);

// p~(2,n): multisets of 1xk blocks tiling 2xn.  Streamed enumeration of the
// partitions of 2n grouped by their {part >= 3} head; never materialized.
Natural p_tilde(std::size_t n);
std::vector<Natural> p_tilde_table(std::size_t n_max, bool vertical_domino = true,
                                   int jobs = 1);

// Second, independent route for small n: multiset unions of pairs of
// partitions of n, plus domino + pairs for n-1, deduplicated in a set.
Natural p_tilde_pairs(std::size_t n);

// Generic brute-force variant with a restricted part alphabet; used as the
// enumeration oracle for the restricted and m-ary counts.
Natural count_tileable_multisets(std::size_t n, const std::vector<std::uint32_t>& parts,
                                 bool allow_vertical_domino);

// R(N, a): partitions of N with no sub-multiset sum equal to a.
Natural r_no_subsum(std::size_t N, std::size_t a);

// p(2,n) by the nuclear convolution p(2,n) = sum_i q(i) p~(2,n-i).
Natural p2(std::size_t n);
std::vector<Natural> p2_table(std::size_t n_max, int jobs = 1);

// Horizontally symmetric multiset counts: S(n) excludes 1x2 blocks, T(n)
// allows them.  Both are coefficient extractions from P(x)^2 (1-x)(1-x^2)
// resp. P(x)^2 (1-x^2).
Natural s_count(std::size_t n);
Natural t_count(std::size_t n);
std::vector<Natural> s_count_table(std::size_t n_max);
std::vector<Natural> t_count_table(std::size_t n_max);

// The weighted recurrence n S(n) = -sum S(n-k) - 2 sum S(n-2k)
// + 2 sum_v sum_k v S(n-kv); returns the first index where it disagrees
// with the convolution route, if any.
std::optional<std::size_t> s_recurrence_mismatch(std::size_t n_max);

struct BoundCheck {
  std::string name;
  Natural lhs;
  Natural rhs;
  bool holds;        // lhs <= rhs
  mpz_class slack;   // rhs - lhs
};

// Evaluates the four p(2,n) inequalities exactly:
//   lower   p(n) + sum_{i<=n} p(i)            <= p(2,n)
//   upper   p(2,n) <= sum_i C(p(n-i)+1, 2) p(i)
//   step    p(2,n-1) + 2p(n) - p(n-1)         <= p(2,n)
//   rotate  p(2,n) <= p(n)^2 + sum_i (p(i)+p(i-1)) p(n-i)^2
std::vector<BoundCheck> verify_bounds(std::size_t n);

}  // namespace rectcount::tile2
