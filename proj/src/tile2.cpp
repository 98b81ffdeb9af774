#include "rectcount/tile2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "strip_count.hpp"

namespace rectcount::tile2 {

namespace {

// 64-bit tileable counts stay exact while p(2n) < 2^63; p(400) ~ 6.7e18 sits
// just under, so 200 columns is the supported ceiling for the unrestricted
// enumeration.
constexpr std::size_t kMaxTildeN = 200;

std::mutex tilde_mu;
std::vector<Natural> tilde_cache;  // p~(2,n), domino rule on

void ensure_tilde(std::size_t n_max, int jobs) {
  if (n_max > kMaxTildeN)
    throw std::invalid_argument("p_tilde: n beyond the supported enumeration range (200)");
  if (tilde_cache.size() > n_max) return;
  auto counts = detail::strip_tileable_counts(n_max, static_cast<std::uint32_t>(2 * n_max + 1),
                                              /*vertical_domino=*/true, jobs);
  tilde_cache.assign(counts.begin(), counts.end());
}

}  // namespace

SubsumProfile make_subsum_profile(const partcore::Partition& p) {
  SubsumProfile out;
  out.partition = p;
  const std::size_t total = out.partition.total.get_ui();
  std::vector<bool> bits(total + 1, false);
  bits[0] = true;
  for (auto part : p.parts)
    for (std::size_t s = total; s >= part; --s)
      if (bits[s - part]) bits[s] = true;
  out.achievable = std::move(bits);
  return out;
}

bool tiles_strip(std::span<const std::uint32_t> parts, std::size_t n,
                 bool allow_vertical_domino) {
  std::vector<bool> bits(2 * n + 1, false);
  bits[0] = true;
  for (auto part : parts) {
    if (part > 2 * n) return false;
    for (std::size_t s = 2 * n; s >= part; --s)
      if (bits[s - part]) bits[s] = true;
  }
  if (bits[n]) return true;
  if (!allow_vertical_domino || n == 0) return false;
  if (std::find(parts.begin(), parts.end(), 2u) == parts.end()) return false;
  // one vertical domino: the rest must split into two rows of n-1
  std::vector<bool> rest(2 * n - 1, false);
  rest[0] = true;
  bool skipped = false;
  for (auto part : parts) {
    if (part == 2 && !skipped) {
      skipped = true;
      continue;
    }
    for (std::size_t s = 2 * n - 2; s >= part; --s)
      if (rest[s - part]) rest[s] = true;
  }
  return rest[n - 1];
}

Natural p_tilde(std::size_t n) {
  std::lock_guard lock(tilde_mu);
  ensure_tilde(n, 1);
  return tilde_cache[n];
}

std::vector<Natural> p_tilde_table(std::size_t n_max, bool vertical_domino, int jobs) {
  if (vertical_domino) {
    std::lock_guard lock(tilde_mu);
    ensure_tilde(n_max, jobs);
    return {tilde_cache.begin(), tilde_cache.begin() + static_cast<std::ptrdiff_t>(n_max) + 1};
  }
  if (n_max > kMaxTildeN)
    throw std::invalid_argument("p_tilde: n beyond the supported enumeration range (200)");
  auto counts = detail::strip_tileable_counts(n_max, static_cast<std::uint32_t>(2 * n_max + 1),
                                              /*vertical_domino=*/false, jobs);
  return {counts.begin(), counts.end()};
}

Natural p_tilde_pairs(std::size_t n) {
  std::set<std::vector<std::uint32_t>> unions;
  std::vector<std::vector<std::uint32_t>> rows;
  auto collect = [](std::size_t total) {
    std::vector<std::vector<std::uint32_t>> out;
    partcore::for_each_partition(total, total ? static_cast<std::uint32_t>(total) : 1,
                                 [&](std::span<const std::uint32_t> p) {
                                   out.emplace_back(p.begin(), p.end());
                                 });
    return out;
  };
  rows = collect(n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      std::vector<std::uint32_t> u;
      std::merge(rows[i].begin(), rows[i].end(), rows[j].begin(), rows[j].end(),
                 std::back_inserter(u), std::greater<>());
      unions.insert(std::move(u));
    }
  if (n >= 1) {
    auto rows1 = collect(n - 1);
    for (std::size_t i = 0; i < rows1.size(); ++i)
      for (std::size_t j = i; j < rows1.size(); ++j) {
        std::vector<std::uint32_t> u{2};
        std::vector<std::uint32_t> merged;
        std::merge(rows1[i].begin(), rows1[i].end(), rows1[j].begin(), rows1[j].end(),
                   std::back_inserter(merged), std::greater<>());
        u.insert(u.end(), merged.begin(), merged.end());
        std::sort(u.begin(), u.end(), std::greater<>());
        unions.insert(std::move(u));
      }
  }
  return Natural(static_cast<unsigned long>(unions.size()));
}

Natural count_tileable_multisets(std::size_t n, const std::vector<std::uint32_t>& parts,
                                 bool allow_vertical_domino) {
  std::vector<std::uint32_t> alphabet(parts);
  std::sort(alphabet.begin(), alphabet.end(), std::greater<>());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  for (auto p : alphabet)
    if (p == 0) throw std::invalid_argument("parts must be positive");

  std::uint64_t count = 0;
  std::vector<std::uint32_t> chosen;
  // enumerate partitions of 2n over the alphabet, largest parts first
  auto rec = [&](auto&& self, std::size_t rem, std::size_t idx) -> void {
    if (rem == 0) {
      count += tiles_strip(chosen, n, allow_vertical_domino);
      return;
    }
    if (idx >= alphabet.size()) return;
    const std::uint32_t p = alphabet[idx];
    if (p <= rem) {
      chosen.push_back(p);
      self(self, rem - p, idx);
      chosen.pop_back();
    }
    self(self, rem, idx + 1);
  };
  rec(rec, 2 * n, 0);
  return Natural(count);
}

Natural r_no_subsum(std::size_t N, std::size_t a) {
  if (a > N) throw std::invalid_argument("r_no_subsum: need 0 <= a <= N");
  if (N > 300) throw std::invalid_argument("r_no_subsum: N beyond 64-bit-safe range (300)");
  return Natural(detail::no_subsum_count(static_cast<std::uint32_t>(N),
                                         static_cast<std::uint32_t>(a)));
}

Natural p2(std::size_t n) {
  auto t = p2_table(n, 1);
  return t[n];
}

std::vector<Natural> p2_table(std::size_t n_max, int jobs) {
  auto pt = p_tilde_table(n_max, true, jobs);
  auto q = partcore::nuclear_q_table(n_max);
  std::vector<Natural> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Natural acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += q[i] * pt[n - i];
    out[n] = std::move(acc);
  }
  return out;
}

namespace {

Natural q2_at(std::ptrdiff_t n) {
  if (n < 0) return 0;
  return partcore::two_colored_q2(static_cast<std::size_t>(n));
}

}  // namespace

Natural s_count(std::size_t n) {
  const auto m = static_cast<std::ptrdiff_t>(n);
  return q2_at(m) - q2_at(m - 1) - q2_at(m - 2) + q2_at(m - 3);
}

Natural t_count(std::size_t n) {
  const auto m = static_cast<std::ptrdiff_t>(n);
  return q2_at(m) - q2_at(m - 2);
}

std::vector<Natural> s_count_table(std::size_t n_max) {
  auto q2 = partcore::two_colored_q2_table(n_max);
  std::vector<Natural> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Natural v = q2[n];
    if (n >= 1) v -= q2[n - 1];
    if (n >= 2) v -= q2[n - 2];
    if (n >= 3) v += q2[n - 3];
    out[n] = std::move(v);
  }
  return out;
}

std::vector<Natural> t_count_table(std::size_t n_max) {
  auto q2 = partcore::two_colored_q2_table(n_max);
  std::vector<Natural> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Natural v = q2[n];
    if (n >= 2) v -= q2[n - 2];
    out[n] = std::move(v);
  }
  return out;
}

std::optional<std::size_t> s_recurrence_mismatch(std::size_t n_max) {
  auto conv = s_count_table(n_max);
  // n S(n) = -sum_k S(n-k) - 2 sum_k S(n-2k) + 2 sum_v sum_k v S(n-kv)
  std::vector<Natural> s(n_max + 1);
  s[0] = 1;
  if (s[0] != conv[0]) return 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Natural acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc -= s[n - k];
    for (std::size_t k = 1; 2 * k <= n; ++k) acc -= 2 * s[n - 2 * k];
    for (std::size_t v = 1; v <= n; ++v)
      for (std::size_t k = 1; k * v <= n; ++k) acc += 2 * static_cast<unsigned long>(v) * s[n - k * v];
    if (acc % static_cast<unsigned long>(n) != 0) return n;
    s[n] = acc / static_cast<unsigned long>(n);
    if (s[n] != conv[n]) return n;
  }
  return std::nullopt;
}

std::vector<BoundCheck> verify_bounds(std::size_t n) {
  if (n < 1) throw std::invalid_argument("verify_bounds: n >= 1");
  auto p = partcore::euler_p_table(n);
  auto p2t = p2_table(n, 1);
  std::vector<BoundCheck> checks;

  auto push = [&](std::string name, Natural lhs, Natural rhs) {
    BoundCheck c;
    c.holds = lhs <= rhs;
    c.slack = rhs - lhs;
    c.name = std::move(name);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    checks.push_back(std::move(c));
  };

  Natural lower = p[n];
  for (std::size_t i = 1; i <= n; ++i) lower += p[i];
  push("sum_lower", lower, p2t[n]);

  Natural upper = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Natural& pn = p[n - i];
    upper += (pn + 1) * pn / 2 * p[i];  // C(p(n-i)+1, 2)
  }
  push("pairs_upper", p2t[n], upper);

  Natural step = p2t[n - 1] + 2 * p[n] - p[n - 1];
  push("step_lower", step, p2t[n]);

  Natural rotate = p[n] * p[n];
  for (std::size_t i = 1; i <= n; ++i) {
    Natural w = p[i] + p[i - 1];
    rotate += w * p[n - i] * p[n - i];
  }
  push("rotate_upper", p2t[n], rotate);

  return checks;
}

}  // namespace rectcount::tile2
