#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rectcount/natural.hpp"

namespace rectcount::partcore {

// A numeric partition: weakly decreasing positive parts plus its total.
struct Partition {
  std::vector<std::uint32_t> parts;
  Natural total{0};

  static Partition of(std::vector<std::uint32_t> parts);
  bool operator==(const Partition&) const = default;
};

// Euler partition function p(n), pentagonal-number recurrence over a shared
// memo table.  Thread-safe; the table is extended under a lock.
Natural euler_p(std::size_t n);
std::vector<Natural> euler_p_table(std::size_t n_max);

// q(n) = p(n) - p(n-1) with p(-1) = 0: partitions of n with no part 1.
Natural nuclear_q(std::size_t n);
std::vector<Natural> nuclear_q_table(std::size_t n_max);

// Partitions of n with every part <= l.
Natural p_max_part(std::size_t n, std::uint32_t l);

// A-partition function p_A(n): parts drawn from the multiset A.  Repeated
// entries of A act as distinct generators (one geometric-series factor each).
Natural p_multiset(std::size_t n, const std::vector<std::uint32_t>& A);

// 2-colored partitions q2(n), the coefficient of x^n in P(x)^2.
// Single-value route: convolution sum over the p table.
Natural two_colored_q2(std::size_t n);
// Table route: squared Euler-product DP.  Must agree with the convolution.
std::vector<Natural> two_colored_q2_table(std::size_t n_max);

// Streams the partitions of `total` with parts <= max_part in reverse
// lexicographic order (largest-first), each exactly once.
class PartitionStream {
 public:
  PartitionStream(std::size_t total, std::uint32_t max_part);

  // Fills `out` (weakly decreasing) and returns true, or returns false when
  // the stream is exhausted.
  bool next(std::vector<std::uint32_t>& out);

 private:
  std::size_t total_;
  std::uint32_t max_part_;
  std::vector<std::uint32_t> cur_;
  bool started_ = false;
  bool done_ = false;
};

// Recursive fast path over the same stream, for counting-style consumers.
void for_each_partition(std::size_t total, std::uint32_t max_part,
                        const std::function<void(std::span<const std::uint32_t>)>& fn);

// c[n] = sum_{k<=n} a[k] b[n-k]; output length = min(|a|, |b|).
std::vector<Natural> convolve(std::span<const Natural> a, std::span<const Natural> b);

}  // namespace rectcount::partcore
