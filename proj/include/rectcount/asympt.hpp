#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rectcount/natural.hpp"

namespace rectcount::asympt {

// c * n^delta * exp(lambda sqrt(n)).
struct AsymSpec {
  double c = 1.0;
  double delta = 0.0;
  double lambda = 0.0;
};

// Preset constants:
//   HR_P     p(n)           ~ 1/(4 sqrt(3) n)     exp(pi sqrt(2n/3))
//   NUCLEAR  p(n)-p(n-1)    ~ pi/(12 sqrt2) n^-3/2 exp(pi sqrt(2n/3))
//   PTILDE   p~(2,n)~p(2n)  ~ 1/(8 sqrt3) n^-1     exp(2 pi sqrt(n/3))
//   Q2       q2(n)          ~ 3^(1/4)/12 n^-5/4    exp(2 pi sqrt(n/3))
//   T        T(n)           ~ pi/(6 3^(1/4)) n^-7/4 exp(2 pi sqrt(n/3))
//   P2       p(2,n)         ~ pi 2^(1/4)/32 n^-7/4 exp(pi sqrt(2n))
AsymSpec preset_hr_p();
AsymSpec preset_nuclear();
AsymSpec preset_ptilde();
AsymSpec preset_q2();
AsymSpec preset_t();
AsymSpec preset_p2();

// Named lookup for the CLI: HR_P, NUCLEAR, PTILDE, Q2, T, P2.
AsymSpec preset_by_name(const std::string& name);

double eval_asym(const AsymSpec& spec, std::size_t n);      // rejects n = 0
double log_eval_asym(const AsymSpec& spec, std::size_t n);  // ln of the above

// Saddle-point composition of the convolution of two exponential-growth
// series f ~ c_f n^alpha e^{A sqrt n}, g ~ c_g n^beta e^{B sqrt n}:
//   (f*g)(n) ~ c_f c_g 2 sqrt(2 pi) A^{2a+1} B^{2b+1} / (A^2+B^2)^{a+b+5/4}
//              * n^{a+b+3/4} exp(sqrt((A^2+B^2) n)).
// Rejects non-positive lambdas.
AsymSpec murty_convolve(const AsymSpec& f, const AsymSpec& g);

// Truncated polynomial expansion of p_A(n): with k = |A|, s_m = sum a^m,
//   p_A(n) ~ (1/prod a_i) sum_{i even, i <= order} sigma_i (n+s_1/2)^{k-1-i}/(k-1-i)!
// where sigma_0 = 1, sigma_2 = -s_2/24, sigma_4 = (5 s_2^2 + 2 s_4)/5760,
// sigma_6 = -(35 s_2^3 + 42 s_2 s_4 + 16 s_6)/2903040.  Terms with
// k-1-i < 0 vanish.
double almkvist_asym(const std::vector<std::uint32_t>& A, std::size_t n, int order);

// Singular expansion of the symmetric-count generating function near x = 1:
// G_T(x) ~ (1-x)^2 / pi * exp(pi^2 / (3 (1-x))).  Requires 0 < x < 1.
double gt_singular(double x);

struct BenfordReport {
  std::uint32_t base;
  std::string prefix;
  double observed_frequency;
  double expected;       // log_b(f+1) - log_b(f)
  std::size_t sample_size;
  std::size_t matches;
};

// Frequency of values whose base-b representation begins with the given
// digit string, against the Benford expectation.  Values must all be >= 1.
BenfordReport benford_report(std::span<const Natural> values, std::uint32_t base,
                             const std::string& prefix);

double benford_expected(std::uint32_t base, const std::string& prefix);

bool begins_with(const Natural& v, std::uint32_t base, const Natural& prefix_value,
                 std::size_t prefix_digits);

struct GoodnessReport {
  bool deriv_to_zero;       // c'(n) decreases monotonically to 0
  bool n_deriv_diverges;    // n c'(n) increases without bound
  bool log_ratio_to_zero;   // (log b)'(n) / c'(n) tends to 0

  bool ok() const { return deriv_to_zero && n_deriv_diverges && log_ratio_to_zero; }
};

// Checks the three growth conditions for a(n) ~ b(n) e^{c(n)} with
// b(n) = c0 n^delta and c(n) = lambda sqrt(n), at derivative order h = 1,
// on a geometric grid up to n_max.  Other h are rejected.
GoodnessReport benford_good_check(const AsymSpec& spec, int h, std::size_t n_max);

// ln T(n) / ln p(n) from the exact tables (paper remark: tends to sqrt 2).
double log_ratio_diag(std::size_t n);

}  // namespace rectcount::asympt
