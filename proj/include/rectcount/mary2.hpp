#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rectcount/natural.hpp"

namespace rectcount::mary2 {

// Base-m digits of n, least significant first; empty for n = 0.
struct BaseMDigits {
  std::uint32_t base = 2;
  std::vector<std::uint32_t> digits;

  std::uint32_t at(std::size_t l) const {  // digits beyond the length are 0
    return l < digits.size() ? digits[l] : 0;
  }
};

BaseMDigits digits_base(std::size_t n, std::uint32_t m);

// m-ary partition count b_m(n): b_m(n) = b_m(n-1) if m does not divide n,
// b_m(n) = b_m(n-m) + b_m(n/m) otherwise.
Natural b_m(std::uint32_t m, std::size_t n);
std::vector<Natural> b_m_table(std::uint32_t m, std::size_t n_max);

// b_{i,0}(2,n): 2xn partitions using one-row blocks 1xm^t, t <= i.
// Recurrence for i >= 2:
//   b_{i,0}(2,n) = b_{i-1,0}(2,n)
//                + sum_{u=0}^{i-1} b_{u,0}(2,n-m^i) b_m(m^{i-u}-m)
//                + b_{i,0}(2,n-m^i),
// bases b_{0,0} = 1 and b_{1,0}(2,n) = 2 floor(n/m)+1 (m >= 3) or n+1 (m=2).
Natural b_i0(std::uint32_t m, std::uint32_t i, std::size_t n);
std::vector<Natural> b_i0_table(std::uint32_t m, std::uint32_t i, std::size_t n_max);

// Enumeration route: parts {1, m, ..., m^i}, vertical domino active iff m=2
// and i >= 1.
Natural b_i0_enumerated(std::uint32_t m, std::uint32_t i, std::size_t n);

// b_{i,j}(2,n) by the j-recursion b_{i,j}(2,n) = b_{i,j}(2,n-m^j) + b_{i,j-1}(2,n).
Natural b_ij(std::uint32_t m, std::uint32_t i, std::uint32_t j, std::size_t n);
std::vector<Natural> b_ij_table(std::uint32_t m, std::uint32_t i, std::uint32_t j,
                                std::size_t n_max);

// Convolution route: b_{i,j}(2,n) = sum_u p_{multiset {m..m^j}}(u) b_{i,0}(2,n-u).
Natural b_ij_convolution(std::uint32_t m, std::uint32_t i, std::uint32_t j,
                         std::size_t n);

// b(2,n) with all power-of-m blocks: saturates at i = j = floor(log_m max(n,1)).
Natural b_full(std::uint32_t m, std::size_t n);

enum class CongruenceKind { alkauskas, b_i0, b_ij };

// Predicted residue of the count mod m from the base-m digit products:
//   alkauskas  b_m(n)        = prod_{l>=1} (c_l + 1)
//   b_i0       m >= 3:         prod_{l=1..i} (2 c_l + 1)
//              m  = 2, i >= 1:  c_0 + 1
//   b_ij       m >= 3:         prod_{l<=min(i,j)} (c_l+1)^2
//                              * prod_{min<l<=i} (2 c_l + 1)
//                              * prod_{min<l<=j} (c_l + 1)
//              m  = 2, i >= 1:  prod_{l=0..j} (c_l + 1)
// The m >= 3 rectangular b_ij product differs from the printed source on the
// shared digit positions l <= min(i,j); the form above is the one the sweep
// verifiers confirm with zero counterexamples.
std::uint32_t congruence_predict(CongruenceKind kind, std::uint32_t m,
                                 std::uint32_t i, std::uint32_t j, std::size_t n);

struct Counterexample {
  std::size_t n;
  std::uint32_t computed_residue;
  std::uint32_t predicted_residue;
  std::string value;  // full decimal count
};

struct CongruenceReport {
  CongruenceKind kind;
  std::uint32_t m, i, j;
  std::size_t n_max;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

CongruenceReport verify_congruences(CongruenceKind kind, std::uint32_t m,
                                    std::uint32_t i, std::uint32_t j,
                                    std::size_t n_max);

}  // namespace rectcount::mary2
