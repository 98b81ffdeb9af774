#include "rectcount/mary2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "rectcount/partcore.hpp"
#include "rectcount/tile2.hpp"

namespace rectcount::mary2 {

namespace {

std::mutex memo_mu;
std::map<std::uint32_t, std::vector<Natural>> bm_memo;
std::map<std::tuple<std::uint32_t, std::uint32_t>, std::vector<Natural>> bi0_memo;
std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<Natural>> bij_memo;

void check_m(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("m-ary functions need m >= 2");
}

// m^e clamped so that "does not fit in the strip" stays representable.
std::size_t pow_clamped(std::uint32_t m, std::uint32_t e, std::size_t cap) {
  std::size_t v = 1;
  for (std::uint32_t t = 0; t < e; ++t) {
    if (v > cap / m) return cap + 1;
    v *= m;
  }
  return v;
}

const std::vector<Natural>& bm_locked(std::uint32_t m, std::size_t n_max) {
  auto& tab = bm_memo[m];
  if (tab.empty()) tab.emplace_back(1);
  while (tab.size() <= n_max) {
    const std::size_t n = tab.size();
    if (n % m) {
      tab.push_back(tab[n - 1]);
    } else {
      Natural v = tab[n - m] + tab[n / m];
      tab.push_back(std::move(v));
    }
  }
  return tab;
}

const std::vector<Natural>& bi0_locked(std::uint32_t m, std::uint32_t i, std::size_t n_max) {
  auto& tab = bi0_memo[{m, i}];
  if (tab.size() > n_max) return tab;

  std::vector<Natural> next(n_max + 1);
  if (i == 0) {
    std::fill(next.begin(), next.end(), Natural(1));
  } else if (i == 1) {
    for (std::size_t n = 0; n <= n_max; ++n)
      next[n] = m == 2 ? Natural(static_cast<unsigned long>(n + 1))
                       : Natural(static_cast<unsigned long>(2 * (n / m) + 1));
  } else {
    const std::size_t mi = pow_clamped(m, i, n_max);
    // b_m(m^{i-u} - m) weights; u = i-1 gives b_m(0) = 1.  Only needed when
    // a 1 x m^i block fits at all.
    std::vector<Natural> weight(i);
    if (mi <= n_max)
      for (std::uint32_t u = 0; u < i; ++u) {
        const std::size_t arg = pow_clamped(m, i - u, 1ull << 40) - m;
        weight[u] = bm_locked(m, arg)[arg];
      }
    std::vector<const std::vector<Natural>*> lower(i);
    for (std::uint32_t u = 0; u < i; ++u) lower[u] = &bi0_locked(m, u, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      Natural v = (*lower[i - 1])[n];  // no 1 x m^i block
      if (n >= mi) {
        for (std::uint32_t u = 0; u < i; ++u) v += (*lower[u])[n - mi] * weight[u];
        v += next[n - mi];
      }
      next[n] = std::move(v);
    }
  }
  auto& slot = bi0_memo[{m, i}];
  slot = std::move(next);
  return slot;
}

const std::vector<Natural>& bij_locked(std::uint32_t m, std::uint32_t i, std::uint32_t j,
                                       std::size_t n_max) {
  if (j == 0) return bi0_locked(m, i, n_max);
  auto& tab = bij_memo[{m, i, j}];
  if (tab.size() > n_max) return tab;
  const auto& prev = bij_locked(m, i, j - 1, n_max);
  const std::size_t mj = pow_clamped(m, j, n_max);
  std::vector<Natural> next(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    next[n] = prev[n];
    if (n >= mj) next[n] += next[n - mj];
  }
  auto& slot = bij_memo[{m, i, j}];
  slot = std::move(next);
  return slot;
}

}  // namespace

BaseMDigits digits_base(std::size_t n, std::uint32_t m) {
  check_m(m);
  BaseMDigits out;
  out.base = m;
  while (n) {
    out.digits.push_back(static_cast<std::uint32_t>(n % m));
    n /= m;
  }
  return out;
}

Natural b_m(std::uint32_t m, std::size_t n) {
  check_m(m);
  std::lock_guard lock(memo_mu);
  return bm_locked(m, n)[n];
}

std::vector<Natural> b_m_table(std::uint32_t m, std::size_t n_max) {
  check_m(m);
  std::lock_guard lock(memo_mu);
  const auto& tab = bm_locked(m, n_max);
  return {tab.begin(), tab.begin() + static_cast<std::ptrdiff_t>(n_max) + 1};
}

Natural b_i0(std::uint32_t m, std::uint32_t i, std::size_t n) {
  check_m(m);
  std::lock_guard lock(memo_mu);
  return bi0_locked(m, i, n)[n];
}

std::vector<Natural> b_i0_table(std::uint32_t m, std::uint32_t i, std::size_t n_max) {
  check_m(m);
  std::lock_guard lock(memo_mu);
  const auto& tab = bi0_locked(m, i, n_max);
  return {tab.begin(), tab.begin() + static_cast<std::ptrdiff_t>(n_max) + 1};
}

Natural b_i0_enumerated(std::uint32_t m, std::uint32_t i, std::size_t n) {
  check_m(m);
  std::vector<std::uint32_t> parts;
  std::size_t v = 1;
  for (std::uint32_t t = 0; t <= i; ++t) {
    parts.push_back(static_cast<std::uint32_t>(v));
    if (v > 2 * n / m) break;  // larger powers cannot appear
    v *= m;
  }
  const bool domino = (m == 2 && i >= 1);
  return tile2::count_tileable_multisets(n, parts, domino);
}

Natural b_ij(std::uint32_t m, std::uint32_t i, std::uint32_t j, std::size_t n) {
  check_m(m);
  std::lock_guard lock(memo_mu);
  return bij_locked(m, i, j, n)[n];
}

std::vector<Natural> b_ij_table(std::uint32_t m, std::uint32_t i, std::uint32_t j,
                                std::size_t n_max) {
  check_m(m);
  std::lock_guard lock(memo_mu);
  const auto& tab = bij_locked(m, i, j, n_max);
  return {tab.begin(), tab.begin() + static_cast<std::ptrdiff_t>(n_max) + 1};
}

Natural b_ij_convolution(std::uint32_t m, std::uint32_t i, std::uint32_t j, std::size_t n) {
  check_m(m);
  std::vector<std::uint32_t> two_row;
  for (std::uint32_t t = 1; t <= j; ++t) {
    const std::size_t v = pow_clamped(m, t, n);
    if (v > n) break;
    two_row.push_back(static_cast<std::uint32_t>(v));
  }
  auto base = b_i0_table(m, i, n);
  Natural acc = 0;
  for (std::size_t u = 0; u <= n; ++u)
    acc += partcore::p_multiset(u, two_row) * base[n - u];
  return acc;
}

Natural b_full(std::uint32_t m, std::size_t n) {
  check_m(m);
  std::uint32_t e = 0;
  std::size_t v = 1;
  while (v <= std::max<std::size_t>(n, 1) / m) {
    v *= m;
    ++e;
  }
  return b_ij(m, e, e, n);
}

std::uint32_t congruence_predict(CongruenceKind kind, std::uint32_t m, std::uint32_t i,
                                 std::uint32_t j, std::size_t n) {
  check_m(m);
  const auto digits = digits_base(n, m);
  auto c = [&](std::uint32_t l) { return digits.at(l); };
  std::uint64_t prod = 1;

  switch (kind) {
    case CongruenceKind::alkauskas: {
      for (std::size_t l = 1; l < digits.digits.size(); ++l) prod = prod * (c(static_cast<std::uint32_t>(l)) + 1) % m;
      break;
    }
    case CongruenceKind::b_i0: {
      if (m == 2) {
        if (i == 0)
          throw std::invalid_argument("congruence_predict: m = 2 rectangular kinds need i >= 1");
        prod = c(0) + 1;
      } else {
        for (std::uint32_t l = 1; l <= i; ++l) prod = prod * (2 * c(l) + 1) % m;
      }
      break;
    }
    case CongruenceKind::b_ij: {
      if (m == 2) {
        if (i == 0)
          throw std::invalid_argument("congruence_predict: m = 2 rectangular kinds need i >= 1");
        for (std::uint32_t l = 0; l <= j; ++l) prod = prod * (c(l) + 1) % m;
      } else {
        // Shared digit positions l <= min(i, j) contribute (c_l+1)^2; the
        // printed (2c_l+1)(c_l+1) form fails there (first at m=3, n=3 with
        // i = j = 1) and the sweeps pin this variant instead.
        const std::uint32_t shared = std::min(i, j);
        for (std::uint32_t l = 1; l <= shared; ++l) {
          const std::uint64_t f = c(l) + 1;
          prod = prod * (f * f % m) % m;
        }
        for (std::uint32_t l = shared + 1; l <= i; ++l) prod = prod * (2 * c(l) + 1) % m;
        for (std::uint32_t l = shared + 1; l <= j; ++l) prod = prod * (c(l) + 1) % m;
      }
      break;
    }
  }
  return static_cast<std::uint32_t>(prod % m);
}

CongruenceReport verify_congruences(CongruenceKind kind, std::uint32_t m, std::uint32_t i,
                                    std::uint32_t j, std::size_t n_max) {
  check_m(m);
  CongruenceReport rep;
  rep.kind = kind;
  rep.m = m;
  rep.i = i;
  rep.j = j;
  rep.n_max = n_max;

  std::vector<Natural> values;
  switch (kind) {
    case CongruenceKind::alkauskas: values = b_m_table(m, n_max); break;
    case CongruenceKind::b_i0: values = b_i0_table(m, i, n_max); break;
    case CongruenceKind::b_ij: values = b_ij_table(m, i, j, n_max); break;
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto predicted = congruence_predict(kind, m, i, j, n);
    const auto computed = static_cast<std::uint32_t>(mpz_fdiv_ui(values[n].get_mpz_t(), m));
    if (computed != predicted) {
      rep.counterexamples.push_back({n, computed, predicted, to_decimal(values[n])});
      if (rep.counterexamples.size() >= 16) break;  // enough context to debug
    }
  }
  return rep;
}

}  // namespace rectcount::mary2
