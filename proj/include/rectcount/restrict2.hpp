#pragma once

#include <cstdint>
#include <vector>

#include "rectcount/natural.hpp"

namespace rectcount::restrict2 {

// Block shape bounds for p_{k,l}(2,n): one-row blocks 1xi with i <= k and
// two-row blocks 2xj with 2 <= j <= l (l = 1 means no two-row blocks).
struct RestrictSpec {
  std::uint32_t k = 1;
  std::uint32_t l = 1;
  std::size_t n = 0;
};

// p_{k,1}(2,n): multisets with parts <= k and sum 2n passing the strip
// tileability predicate (vertical domino admitted iff k >= 2).
Natural p_k1(std::uint32_t k, std::size_t n);
std::vector<Natural> p_k1_table(std::uint32_t k, std::size_t n_max, int jobs = 1);

// p_{k,l}(2,n) via the recursion p_{k,l}(2,n) = p_{k,l}(2,n-l) + p_{k,l-1}(2,n),
// bottoming out at l = 1.  Memoized per (k, l).
Natural p_kl(std::uint32_t k, std::uint32_t l, std::size_t n);
std::vector<Natural> p_kl_table(std::uint32_t k, std::uint32_t l, std::size_t n_max);

// Independent route for l >= 2: convolution of the restricted partition
// numbers p_{2..l}(i) with the p_{k,1} base sequence.
Natural p_kl_convolution(std::uint32_t k, std::uint32_t l, std::size_t n);

// Exact rational evaluation of the closed forms for 1 <= k, l <= 3 (residue
// case functions mod 2, 3 or 6).  Throws std::invalid_argument outside that
// range; a non-integral value would be an implementation error and throws
// std::logic_error.
Natural closed_form_table1(std::uint32_t k, std::uint32_t l, std::size_t n);

// Blocks {1x1, 1xm} only, m >= 3: closed form 2 floor(n/m) + 1.
Natural p_two_parts(std::uint32_t m, std::size_t n);

struct GrowthReport {
  std::uint32_t k, l;
  std::size_t n_max;
  double ratio_half;   // r(n_max / 2)
  double ratio_full;   // r(n_max)
  bool converging;     // |r(n_max) - 1| < |r(n_max/2) - 1|
  bool bracketed;      // r(n_max) in [0.5, 2.0]
};

// r(n) = p_{k,l}(2,n) l! k! (k+l-2)! / (2^{k-1} n^{k+l-2}), the ratio against
// the leading asymptotic term.
GrowthReport growth_diagnostic(std::uint32_t k, std::uint32_t l, std::size_t n_max);

}  // namespace rectcount::restrict2
