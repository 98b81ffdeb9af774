#include "rectcount/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "rectcount/partcore.hpp"
#include "rectcount/tile2.hpp"

namespace rectcount::asympt {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

AsymSpec preset_hr_p() { return {1.0 / (4.0 * std::sqrt(3.0)), -1.0, kPi * std::sqrt(2.0 / 3.0)}; }

AsymSpec preset_nuclear() {
  return {kPi / (12.0 * std::sqrt(2.0)), -1.5, kPi * std::sqrt(2.0 / 3.0)};
}

AsymSpec preset_ptilde() { return {1.0 / (8.0 * std::sqrt(3.0)), -1.0, 2.0 * kPi / std::sqrt(3.0)}; }

AsymSpec preset_q2() {
  return {std::pow(3.0, 0.25) / 12.0, -1.25, 2.0 * kPi / std::sqrt(3.0)};
}

AsymSpec preset_t() {
  return {kPi / (6.0 * std::pow(3.0, 0.25)), -1.75, 2.0 * kPi / std::sqrt(3.0)};
}

AsymSpec preset_p2() {
  return {kPi * std::pow(2.0, 0.25) / 32.0, -1.75, kPi * std::sqrt(2.0)};
}

AsymSpec preset_by_name(const std::string& name) {
  static const std::map<std::string, AsymSpec (*)()> table = {
      {"HR_P", preset_hr_p}, {"NUCLEAR", preset_nuclear}, {"PTILDE", preset_ptilde},
      {"Q2", preset_q2},     {"T", preset_t},             {"P2", preset_p2},
  };
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), ::toupper);
  auto it = table.find(key);
  if (it == table.end()) throw std::invalid_argument("unknown asymptotic preset: " + name);
  return it->second();
}

double eval_asym(const AsymSpec& spec, std::size_t n) {
  return std::exp(log_eval_asym(spec, n));
}

double log_eval_asym(const AsymSpec& spec, std::size_t n) {
  if (n == 0) throw std::domain_error("eval_asym: n >= 1");
  const double x = static_cast<double>(n);
  return std::log(spec.c) + spec.delta * std::log(x) + spec.lambda * std::sqrt(x);
}

AsymSpec murty_convolve(const AsymSpec& f, const AsymSpec& g) {
  if (f.lambda <= 0 || g.lambda <= 0)
    throw std::invalid_argument("murty_convolve: both exponential coefficients must be > 0");
  const double A = f.lambda, B = g.lambda;
  const double alpha = f.delta, beta = g.delta;
  const double AB2 = A * A + B * B;
  AsymSpec out;
  out.c = f.c * g.c * 2.0 * std::sqrt(2.0 * kPi) * std::pow(A, 2.0 * alpha + 1.0) *
          std::pow(B, 2.0 * beta + 1.0) / std::pow(AB2, alpha + beta + 1.25);
  out.delta = alpha + beta + 0.75;
  out.lambda = std::sqrt(AB2);
  return out;
}

double almkvist_asym(const std::vector<std::uint32_t>& A, std::size_t n, int order) {
  if (A.empty()) throw std::invalid_argument("almkvist_asym: A must be nonempty");
  if (order < 0 || order > 6 || order % 2 != 0)
    throw std::invalid_argument("almkvist_asym: order must be 0, 2, 4 or 6");
  const int k = static_cast<int>(A.size());
  double prod = 1.0, s1 = 0.0, s2 = 0.0, s4 = 0.0, s6 = 0.0;
  for (auto a : A) {
    const double x = a;
    prod *= x;
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
    s6 += x * x * x * x * x * x;
  }
  const double sigma[7] = {
      1.0, 0.0, -s2 / 24.0, 0.0, (5.0 * s2 * s2 + 2.0 * s4) / 5760.0, 0.0,
      -(35.0 * s2 * s2 * s2 + 42.0 * s2 * s4 + 16.0 * s6) / 2903040.0};
  const double base = static_cast<double>(n) + s1 / 2.0;
  double acc = 0.0;
  for (int i = 0; i <= order; i += 2) {
    const int e = k - 1 - i;
    if (e < 0) continue;  // the expansion terminates
    double term = sigma[i];
    for (int t = 1; t <= e; ++t) term *= base / t;  // base^e / e!
    acc += term;
  }
  return acc / prod;
}

double gt_singular(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("gt_singular: need 0 < x < 1");
  const double om = 1.0 - x;
  return om * om / kPi * std::exp(kPi * kPi / (3.0 * om));
}

double benford_expected(std::uint32_t base, const std::string& prefix) {
  if (base < 2) throw std::invalid_argument("benford: base >= 2");
  if (prefix.empty()) throw std::invalid_argument("benford: empty prefix");
  Natural f = 0;
  for (char ch : prefix) {
    int d;
    if (ch >= '0' && ch <= '9')
      d = ch - '0';
    else if (ch >= 'a' && ch <= 'z')
      d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'Z')
      d = ch - 'A' + 10;
    else
      throw std::invalid_argument("benford: bad digit in prefix");
    if (d >= static_cast<int>(base)) throw std::invalid_argument("benford: digit out of base");
    f = f * base + d;
  }
  if (prefix.size() > 1 && (prefix[0] == '0'))
    throw std::invalid_argument("benford: leading digit must be nonzero");
  if (f == 0) throw std::invalid_argument("benford: prefix must be nonzero");
  const double lf = log_natural(f), lf1 = log_natural(f + 1);
  return (lf1 - lf) / std::log(static_cast<double>(base));
}

bool begins_with(const Natural& v, std::uint32_t base, const Natural& prefix_value,
                 std::size_t prefix_digits) {
  // digit count of v in `base`; sizeinbase may overshoot by one
  std::size_t dv = mpz_sizeinbase(v.get_mpz_t(), static_cast<int>(base));
  if (dv > 1) {
    Natural low;
    mpz_ui_pow_ui(low.get_mpz_t(), base, static_cast<unsigned long>(dv - 1));
    if (v < low) --dv;
  }
  if (dv < prefix_digits) return false;
  Natural shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), base, static_cast<unsigned long>(dv - prefix_digits));
  return v / shift == prefix_value;
}

BenfordReport benford_report(std::span<const Natural> values, std::uint32_t base,
                             const std::string& prefix) {
  if (values.empty()) throw std::invalid_argument("benford_report: empty input");
  const double expected = benford_expected(base, prefix);  // also validates prefix
  Natural f = 0;
  for (char ch : prefix)
    f = f * base + (ch <= '9' ? ch - '0' : (ch | 32) - 'a' + 10);

  // powers of the base, cached per digit-count gap
  std::size_t matches = 0;
  for (const auto& v : values) {
    if (v < 1) throw std::invalid_argument("benford_report: values must be >= 1");
    if (begins_with(v, base, f, prefix.size())) ++matches;
  }
  BenfordReport rep;
  rep.base = base;
  rep.prefix = prefix;
  rep.sample_size = values.size();
  rep.matches = matches;
  rep.observed_frequency = static_cast<double>(matches) / static_cast<double>(values.size());
  rep.expected = expected;
  return rep;
}

GoodnessReport benford_good_check(const AsymSpec& spec, int h, std::size_t n_max) {
  if (h != 1) throw std::invalid_argument("benford_good_check: only h = 1 is supported");
  if (n_max < 1000) throw std::invalid_argument("benford_good_check: n_max >= 1000");

  // geometric grid from 10 to n_max
  std::vector<double> grid;
  const int points = 24;
  for (int i = 0; i <= points; ++i)
    grid.push_back(10.0 * std::pow(static_cast<double>(n_max) / 10.0,
                                   static_cast<double>(i) / points));

  auto c_prime = [&](double x) { return spec.lambda / (2.0 * std::sqrt(x)); };
  auto logb_prime = [&](double x) { return spec.delta / x; };

  GoodnessReport rep{true, true, true};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(c_prime(grid[i]) < c_prime(grid[i - 1]))) rep.deriv_to_zero = false;
    if (!(grid[i] * c_prime(grid[i]) > grid[i - 1] * c_prime(grid[i - 1])))
      rep.n_deriv_diverges = false;
  }
  if (spec.lambda > 0) {
    const double first = std::abs(logb_prime(grid.front()) / c_prime(grid.front()));
    const double last = std::abs(logb_prime(grid.back()) / c_prime(grid.back()));
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double prev = std::abs(logb_prime(grid[i - 1]) / c_prime(grid[i - 1]));
      const double cur = std::abs(logb_prime(grid[i]) / c_prime(grid[i]));
      if (cur > prev) rep.log_ratio_to_zero = false;
    }
    if (!(last < 0.5 * first || last == 0.0)) rep.log_ratio_to_zero = false;
  } else {
    rep.log_ratio_to_zero = (spec.delta == 0.0);
  }
  if (spec.lambda > 0) {
    if (!(c_prime(grid.back()) < 0.11 * c_prime(grid.front()))) rep.deriv_to_zero = false;
  }
  return rep;
}

double log_ratio_diag(std::size_t n) {
  if (n < 2) throw std::invalid_argument("log_ratio_diag: n >= 2");
  const Natural t = tile2::t_count(n);
  const Natural p = partcore::euler_p(n);
  return log_natural(t) / log_natural(p);
}

}  // namespace rectcount::asympt
