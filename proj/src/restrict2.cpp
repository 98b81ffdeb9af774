#include "rectcount/restrict2.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "rectcount/partcore.hpp"
#include "strip_count.hpp"

namespace rectcount::restrict2 {

namespace {

std::mutex memo_mu;
std::map<std::uint32_t, std::vector<Natural>> k1_memo;                       // k -> table
std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Natural>> kl_memo;

void check_kl(std::uint32_t k, std::uint32_t l) {
  if (k < 1 || l < 1) throw std::invalid_argument("p_kl: need k >= 1 and l >= 1");
  if (k > 16) throw std::invalid_argument("p_kl: k beyond supported range (16)");
}

const std::vector<Natural>& k1_locked(std::uint32_t k, std::size_t n_max, int jobs) {
  auto& tab = k1_memo[k];
  if (tab.size() <= n_max) {
    auto counts = detail::strip_tileable_counts(n_max, k, /*vertical_domino=*/k >= 2, jobs);
    tab.assign(counts.begin(), counts.end());
  }
  return tab;
}

const std::vector<Natural>& kl_locked(std::uint32_t k, std::uint32_t l, std::size_t n_max,
                                      int jobs) {
  if (l == 1) return k1_locked(k, n_max, jobs);
  auto& tab = kl_memo[{k, l}];
  if (tab.size() > n_max) return tab;
  const auto& prev = kl_locked(k, l - 1, n_max, jobs);
  std::vector<Natural> next(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    next[n] = prev[n];
    if (n >= l) next[n] += next[n - l];
  }
  tab = std::move(next);
  return tab;
}

}  // namespace

Natural p_k1(std::uint32_t k, std::size_t n) {
  check_kl(k, 1);
  std::lock_guard lock(memo_mu);
  return k1_locked(k, n, 1)[n];
}

std::vector<Natural> p_k1_table(std::uint32_t k, std::size_t n_max, int jobs) {
  check_kl(k, 1);
  std::lock_guard lock(memo_mu);
  const auto& tab = k1_locked(k, n_max, jobs);
  return {tab.begin(), tab.begin() + static_cast<std::ptrdiff_t>(n_max) + 1};
}

Natural p_kl(std::uint32_t k, std::uint32_t l, std::size_t n) {
  check_kl(k, l);
  std::lock_guard lock(memo_mu);
  return kl_locked(k, l, n, 1)[n];
}

std::vector<Natural> p_kl_table(std::uint32_t k, std::uint32_t l, std::size_t n_max) {
  check_kl(k, l);
  std::lock_guard lock(memo_mu);
  const auto& tab = kl_locked(k, l, n_max, 1);
  return {tab.begin(), tab.begin() + static_cast<std::ptrdiff_t>(n_max) + 1};
}

Natural p_kl_convolution(std::uint32_t k, std::uint32_t l, std::size_t n) {
  check_kl(k, l);
  if (l < 2) throw std::invalid_argument("p_kl_convolution: needs l >= 2");
  std::vector<std::uint32_t> two_row;
  for (std::uint32_t j = 2; j <= l; ++j) two_row.push_back(j);
  auto base = p_k1_table(k, n, 1);
  Natural acc = 0;
  for (std::size_t i = 0; i <= n; ++i)
    acc += partcore::p_multiset(i, two_row) * base[n - i];
  return acc;
}

namespace {

// Residue case functions from the 1 <= k,l <= 3 closed forms.
Rational case_a(std::uint32_t k, std::uint32_t l, std::size_t n) {
  auto r = [](long num, unsigned long den) { return make_rational(num, den); };
  const auto m2 = n % 2, m3 = n % 3, m6 = n % 6;
  if (k == 1 && l == 2) return m2 == 0 ? r(1, 1) : r(1, 2);
  if (k == 1 && l == 3) {
    switch (m6) {
      case 0: return r(1, 1);
      case 1: case 5: return r(5, 12);
      case 2: case 4: return r(2, 3);
      default: return r(3, 4);  // n = 3 (mod 6)
    }
  }
  if (k == 2 && l == 2) return m2 == 0 ? r(1, 1) : r(3, 4);
  if (k == 2 && l == 3) {
    switch (m6) {
      case 0: return r(1, 1);
      case 1: return r(55, 72);
      case 2: return r(7, 9);
      case 3: return r(7, 8);
      case 4: return r(8, 9);
      default: return r(47, 72);
    }
  }
  if (k == 3 && l == 1) {
    switch (m3) {
      case 0: return r(1, 1);
      case 1: return r(2, 3);
      default: return r(-1, 3);
    }
  }
  if (k == 3 && l == 2) {
    switch (m6) {
      case 0: return r(1, 1);
      case 1: return r(25, 36);
      case 2: return r(2, 9);
      case 3: return r(5, 4);
      case 4: return r(4, 9);
      default: return r(17, 36);
    }
  }
  // k == 3 && l == 3: affine in n per residue class
  Rational nn(static_cast<unsigned long>(n));
  switch (m6) {
    case 0: return nn + 1;
    case 1: return make_rational(22, 27) * nn + make_rational(155, 216);
    case 2: return make_rational(20, 27) * nn + make_rational(8, 27);
    case 3: return nn + make_rational(9, 8);
    case 4: return make_rational(22, 27) * nn + make_rational(16, 27);
    default: return make_rational(20, 27) * nn + make_rational(91, 216);
  }
}

}  // namespace

Natural closed_form_table1(std::uint32_t k, std::uint32_t l, std::size_t n) {
  if (k < 1 || k > 3 || l < 1 || l > 3)
    throw std::invalid_argument("closed_form_table1: 1 <= k, l <= 3");
  Rational nn(static_cast<unsigned long>(n));
  Rational v;
  if (k == 1 && l == 1) {
    v = 1;
  } else if (k == 2 && l == 1) {
    v = nn + 1;
  } else if (k == 1 && l == 2) {
    v = nn / 2 + case_a(1, 2, n);
  } else if (k == 1 && l == 3) {
    v = nn * nn / 12 + nn / 2 + case_a(1, 3, n);
  } else if (k == 2 && l == 2) {
    v = nn * nn / 4 + nn + case_a(2, 2, n);
  } else if (k == 2 && l == 3) {
    v = nn * nn * nn / 36 + nn * nn * 7 / 24 + nn * 11 / 12 + case_a(2, 3, n);
  } else if (k == 3 && l == 1) {
    v = nn * nn / 3 + nn + case_a(3, 1, n);
  } else if (k == 3 && l == 2) {
    v = nn * nn * nn / 18 + nn * nn * 5 / 12 + nn * 5 / 6 + case_a(3, 2, n);
  } else {  // k == 3, l == 3
    v = nn * nn * nn * nn / 216 + nn * nn * nn * 2 / 27 + nn * nn * 7 / 18 + case_a(3, 3, n);
  }
  v.canonicalize();
  if (v.get_den() != 1)
    throw std::logic_error("closed_form_table1: non-integral value, implementation error");
  return v.get_num();
}

Natural p_two_parts(std::uint32_t m, std::size_t n) {
  if (m < 3) throw std::invalid_argument("p_two_parts: needs m >= 3");
  return Natural(static_cast<unsigned long>(2 * (n / m) + 1));
}

GrowthReport growth_diagnostic(std::uint32_t k, std::uint32_t l, std::size_t n_max) {
  if (k + l < 2 || n_max < 10)
    throw std::invalid_argument("growth_diagnostic: need k+l >= 2 and n_max >= 10");
  auto table = p_kl_table(k, l, n_max);
  auto ratio = [&](std::size_t n) {
    double fact = 1.0;
    for (std::uint32_t i = 2; i <= l; ++i) fact *= i;
    for (std::uint32_t i = 2; i <= k; ++i) fact *= i;
    for (std::uint32_t i = 2; i + 2 <= k + l; ++i) fact *= i;
    const double lead = std::pow(2.0, static_cast<double>(k) - 1) *
                        std::pow(static_cast<double>(n), static_cast<double>(k + l) - 2.0);
    return table[n].get_d() * fact / lead;
  };
  GrowthReport rep;
  rep.k = k;
  rep.l = l;
  rep.n_max = n_max;
  rep.ratio_half = ratio(n_max / 2);
  rep.ratio_full = ratio(n_max);
  rep.converging = std::abs(rep.ratio_full - 1.0) < std::abs(rep.ratio_half - 1.0);
  rep.bracketed = rep.ratio_full >= 0.5 && rep.ratio_full <= 2.0;
  return rep;
}

}  // namespace rectcount::restrict2
