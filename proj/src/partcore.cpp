#include "rectcount/partcore.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace rectcount::partcore {

namespace {

// Shared pentagonal-recurrence table.  Extension happens under a lock and
// callers copy entries out, so concurrent use stays deterministic.
class EulerTable {
 public:
  static EulerTable& instance() {
    static EulerTable t;
    return t;
  }

  Natural value(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(n);
    return table_[n];
  }

  std::vector<Natural> prefix(std::size_t n_max) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(n_max);
    return {table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n_max) + 1};
  }

 private:
  void extend(std::size_t n) {
    if (table_.empty()) table_.emplace_back(1);
    Natural acc;
    while (table_.size() <= n) {
      const std::size_t m = table_.size();
      acc = 0;
      for (std::size_t k = 1;; ++k) {
        const std::size_t g1 = k * (3 * k - 1) / 2;
        if (g1 > m) break;
        const std::size_t g2 = k * (3 * k + 1) / 2;
        if (k & 1) {
          acc += table_[m - g1];
          if (g2 <= m) acc += table_[m - g2];
        } else {
          acc -= table_[m - g1];
          if (g2 <= m) acc -= table_[m - g2];
        }
      }
      table_.push_back(acc);
    }
  }

  std::mutex mu_;
  std::vector<Natural> table_;
};

void check_parts_positive(const std::vector<std::uint32_t>& parts) {
  for (auto p : parts)
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
}

}  // namespace

Partition Partition::of(std::vector<std::uint32_t> parts) {
  check_parts_positive(parts);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition out;
  out.total = std::accumulate(parts.begin(), parts.end(), Natural(0),
                              [](Natural acc, std::uint32_t p) { return acc + p; });
  out.parts = std::move(parts);
  return out;
}

Natural euler_p(std::size_t n) { return EulerTable::instance().value(n); }

std::vector<Natural> euler_p_table(std::size_t n_max) {
  return EulerTable::instance().prefix(n_max);
}

Natural nuclear_q(std::size_t n) {
  if (n == 0) return 1;
  return euler_p(n) - euler_p(n - 1);
}

std::vector<Natural> nuclear_q_table(std::size_t n_max) {
  auto p = euler_p_table(n_max);
  std::vector<Natural> q(n_max + 1);
  q[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) q[n] = p[n] - p[n - 1];
  return q;
}

Natural p_max_part(std::size_t n, std::uint32_t l) {
  if (l == 0) throw std::invalid_argument("p_max_part: l must be >= 1");
  std::vector<Natural> dp(n + 1);
  dp[0] = 1;
  for (std::uint32_t part = 1; part <= l && part <= n; ++part)
    for (std::size_t j = part; j <= n; ++j) dp[j] += dp[j - part];
  return dp[n];
}

Natural p_multiset(std::size_t n, const std::vector<std::uint32_t>& A) {
  check_parts_positive(A);
  std::vector<Natural> dp(n + 1);
  dp[0] = 1;
  for (auto part : A) {  // one geometric-series factor per element
    if (part > n) continue;
    for (std::size_t j = part; j <= n; ++j) dp[j] += dp[j - part];
  }
  return dp[n];
}

Natural two_colored_q2(std::size_t n) {
  auto p = euler_p_table(n);
  Natural acc = 0;
  for (std::size_t k = 0; k <= n; ++k) acc += p[k] * p[n - k];
  return acc;
}

std::vector<Natural> two_colored_q2_table(std::size_t n_max) {
  std::vector<Natural> dp(n_max + 1);
  dp[0] = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 1; k <= n_max; ++k)
      for (std::size_t j = k; j <= n_max; ++j) dp[j] += dp[j - k];
  return dp;
}

PartitionStream::PartitionStream(std::size_t total, std::uint32_t max_part)
    : total_(total), max_part_(max_part) {
  if (max_part == 0) throw std::invalid_argument("PartitionStream: max_part must be >= 1");
}

bool PartitionStream::next(std::vector<std::uint32_t>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    // Greedy largest-first start: the reverse-lexicographic maximum.
    cur_.clear();
    std::size_t rem = total_;
    while (rem >= max_part_) {
      cur_.push_back(max_part_);
      rem -= max_part_;
    }
    if (rem > 0) cur_.push_back(static_cast<std::uint32_t>(rem));
    out = cur_;
    return true;
  }
  // Successor: absorb the trailing ones, decrement the last part > 1, refill
  // greedily with the decremented value.
  std::size_t ones = 0;
  while (ones < cur_.size() && cur_[cur_.size() - 1 - ones] == 1) ++ones;
  if (ones == cur_.size()) {
    done_ = true;
    return false;
  }
  const std::size_t i = cur_.size() - 1 - ones;
  const std::uint32_t v = cur_[i] - 1;
  std::size_t rem = cur_[i] + ones;
  cur_.resize(i);
  while (rem >= v) {
    cur_.push_back(v);
    rem -= v;
  }
  if (rem > 0) cur_.push_back(static_cast<std::uint32_t>(rem));
  out = cur_;
  return true;
}

namespace {

void rec_partitions(std::size_t rem, std::uint32_t max_part,
                    std::vector<std::uint32_t>& stack,
                    const std::function<void(std::span<const std::uint32_t>)>& fn) {
  if (rem == 0) {
    fn(stack);
    return;
  }
  for (std::uint32_t p = static_cast<std::uint32_t>(std::min<std::size_t>(max_part, rem));
       p >= 1; --p) {
    stack.push_back(p);
    rec_partitions(rem - p, p, stack, fn);
    stack.pop_back();
  }
}

}  // namespace

void for_each_partition(std::size_t total, std::uint32_t max_part,
                        const std::function<void(std::span<const std::uint32_t>)>& fn) {
  if (max_part == 0) throw std::invalid_argument("for_each_partition: max_part must be >= 1");
  std::vector<std::uint32_t> stack;
  rec_partitions(total, max_part, stack, fn);
}

std::vector<Natural> convolve(std::span<const Natural> a, std::span<const Natural> b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<Natural> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    Natural acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out[n] = std::move(acc);
  }
  return out;
}

}  // namespace rectcount::partcore
