#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rectcount/natural.hpp"
#include "rectcount/seq_table.hpp"

namespace rectcount::qpfit {

// One ansatz term [r_{i,j,0}, ..., r_{i,j,j-1}]_j n^i: contributes n^i when
// n = r (mod j).
struct AnsatzTerm {
  std::uint32_t power;    // i in [0, k-1]
  std::uint32_t modulus;  // j in [1, k]
  std::uint32_t residue;  // r in [0, j-1]
};

struct AnsatzBasis {
  std::uint32_t k = 1;
  std::vector<AnsatzTerm> terms;  // complete enumeration, size k * k(k+1)/2
};

AnsatzBasis build_ansatz(std::uint32_t k);

// Residue-dispatched polynomial family: value at n is polys[n mod period]
// evaluated at n.  Coefficients ascending by power.
struct QuasiPolynomial {
  std::uint32_t period = 1;
  std::vector<std::vector<Rational>> polys;
  std::size_t valid_from = 0;

  Rational evaluate(std::size_t n) const;
};

Rational evaluate_qp(const QuasiPolynomial& qp, std::size_t n);

struct FitResult {
  AnsatzBasis basis;
  std::vector<Rational> coefficients;  // aligned with basis.terms
  std::size_t start = 0;               // A
  std::size_t end = 0;                 // B
  QuasiPolynomial canonical;

  // Paper-style bracket rendering of the raw solution.
  std::string bracket_notation() const;
};

std::size_t lcm_upto(std::uint32_t k);

// Window size policy: number of basis terms plus 2 lcm(1..k) slack equations.
std::size_t fit_window_size(std::uint32_t k);

// Exact rational least-structure solve of
//   sum_{i,j} r_{i,j,n mod j} n^i = values[n]   for n = A..B.
// Returns nullopt when the system is inconsistent; free variables are pinned
// to 0 and the solution is canonicalized (expand to period lcm(1..k), fold to
// the minimal period).  Throws std::invalid_argument when the window is
// smaller than fit_window_size(k) or runs past the table.
std::optional<FitResult> fit_window(const SeqTable& values, const AnsatzBasis& basis,
                                    std::size_t A, std::size_t B);

struct MinStartResult {
  FitResult fit;
  std::size_t N_k;  // smallest feasible start with full holdout agreement
};

// Increments A from 0 until fit_window succeeds AND the fitted formula
// reproduces every tabulated value with index >= A (holdout verification).
// Throws std::runtime_error when no such A exists within the table.
MinStartResult fit_min_start(const SeqTable& values, std::uint32_t k);

struct GfCheckReport {
  std::vector<mpz_class> numerator;     // series * Q(x), trimmed
  std::optional<std::size_t> degree;    // deg P when the tail vanishes
  bool polynomial_within_range = false;
};

// Multiplies the truncated series by Q(x) = prod_{i<=k}(1-x^i) prod_{2<=i<=l}(1-x^i)
// and reports whether all coefficients beyond some index vanish (margin 40).
GfCheckReport rational_gf_check(const SeqTable& values, std::uint32_t k, std::uint32_t l);

}  // namespace rectcount::qpfit
