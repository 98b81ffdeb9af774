#include "strip_count.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace rectcount::detail {

namespace {

constexpr std::uint64_t kEvenMask = 0x5555555555555555ull;  // bits at even sums
constexpr std::uint64_t kInf = 1ull << 62;                  // unreachable-parity sentinel

// dst = src | (src << s); arrays of `words` 64-bit words, dst != src.
inline void shift_or(const std::uint64_t* src, std::uint64_t* dst, std::size_t words,
                     std::uint32_t s) {
  const std::size_t ws = s >> 6;
  const std::uint32_t bs = s & 63;
  if (bs == 0) {
    for (std::size_t w = words; w-- > 0;)
      dst[w] = src[w] | (w >= ws ? src[w - ws] : 0);
  } else {
    for (std::size_t w = words; w-- > 0;) {
      const std::uint64_t hi = w >= ws ? src[w - ws] << bs : 0;
      const std::uint64_t lo = w > ws ? src[w - ws - 1] >> (64 - bs) : 0;
      dst[w] = src[w] | hi | lo;
    }
  }
}

inline bool test_bit(const std::uint64_t* bits, std::size_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1u;
}

// Any achievable sum in [lo, hi], optionally restricted to one parity.
bool any_in_window(const std::uint64_t* bits, std::size_t lo, std::size_t hi,
                   int parity /* -1 = both */) {
  if (lo > hi) return false;
  const std::size_t wlo = lo >> 6, whi = hi >> 6;
  const std::uint64_t mlo = ~0ull << (lo & 63);
  const std::uint64_t mhi = (hi & 63) == 63 ? ~0ull : ((1ull << ((hi & 63) + 1)) - 1);
  for (std::size_t w = wlo; w <= whi; ++w) {
    std::uint64_t m = ~0ull;
    if (w == wlo) m &= mlo;
    if (w == whi) m &= mhi;
    if (parity == 0) m &= kEvenMask;
    if (parity == 1) m &= ~kEvenMask;
    if (bits[w] & m) return true;
  }
  return false;
}

// Nearest achievable sums around s0/2, as doubled distances d[parity] =
// min{|2 sigma - s0| : sigma in S, sigma = parity (mod 2)}; scans outward
// until both parities resolve or v exceeds v_cap (unresolved ones get kInf).
void middle_distances(const std::uint64_t* bits, std::size_t s0, std::uint64_t v_cap,
                      std::uint64_t d[2]) {
  d[0] = d[1] = kInf;
  const std::uint64_t limit = std::min<std::uint64_t>(v_cap, s0);
  for (std::uint64_t v = s0 & 1; v <= limit; v += 2) {
    const std::size_t hi = (s0 + v) / 2;
    if (test_bit(bits, hi)) {  // by symmetry sigma = s0 - hi is achievable too
      if (d[hi & 1] == kInf) d[hi & 1] = v;
      const std::size_t lo = s0 - hi;
      if (d[lo & 1] == kInf) d[lo & 1] = v;
      if (d[0] != kInf && d[1] != kInf) return;
    }
  }
}

// Number of (c2, c1) tail completions that tile, for one head at strip
// length n.  R is the tail area 2n - s0; d0/d1 are the head's doubled
// middle distances per achievable-sum parity.
inline std::uint64_t tail_choices(std::uint64_t R, std::uint64_t d0, std::uint64_t d1,
                                  bool n_odd, bool allow_twos, bool domino) {
  std::uint64_t cnt = 0;
  if (R >= 1 && std::min(d0, d1) <= R)
    cnt += allow_twos ? (R - 1) / 2 + 1 : 1;  // completions with c1 >= 1
  if ((R & 1) == 0 && (allow_twos || R == 0)) {
    const std::uint64_t dn = n_odd ? d1 : d0;   // parity of n
    const std::uint64_t dn1 = n_odd ? d0 : d1;  // parity of n-1
    if (dn <= R || (domino && R >= 2 && dn1 + 2 <= R)) cnt += 1;  // c1 = 0
  }
  return cnt;
}

// DFS over heads: partitions with parts in [3, head_max] and sum <= s_max,
// parts non-increasing, one incremental subset-sum bitset per level.  Every
// head is visited exactly once; the empty head belongs to subtree 0.
template <typename Visit>
class HeadWalk {
 public:
  HeadWalk(std::size_t s_max, std::uint32_t head_max, Visit visit)
      : s_max_(s_max),
        head_max_(static_cast<std::uint32_t>(std::min<std::size_t>(head_max, s_max))),
        words_(s_max / 64 + 1),
        stack_((s_max / 3 + 2) * words_),
        visit_(visit) {
    std::fill_n(stack_.begin(), words_, 0);
    stack_[0] = 1;  // empty head: only sum 0 achievable
  }

  // subtree 0: the empty head alone; subtree p >= 3: heads with largest
  // part exactly p.
  void run_subtree(std::uint32_t first) {
    if (first == 0) {
      visit_(0, stack_.data());
      return;
    }
    if (first < 3 || first > head_max_ || first > s_max_) return;
    push(0, first);
    rec(first, first, 1);
  }

  void run_all() {
    run_subtree(0);
    for (std::uint32_t p = 3; p <= head_max_; ++p) run_subtree(p);
  }

  std::uint32_t head_max() const { return head_max_; }

 private:
  void push(std::size_t level, std::uint32_t part) {
    shift_or(&stack_[level * words_], &stack_[(level + 1) * words_], words_, part);
  }

  void rec(std::size_t sum, std::uint32_t max_next, std::size_t level) {
    visit_(sum, &stack_[level * words_]);
    const std::uint32_t top =
        static_cast<std::uint32_t>(std::min<std::size_t>(max_next, s_max_ - sum));
    for (std::uint32_t p = 3; p <= top; ++p) {
      push(level, p);
      rec(sum + p, p, level + 1);
    }
  }

  std::size_t s_max_;
  std::uint32_t head_max_;
  std::size_t words_;
  std::vector<std::uint64_t> stack_;
  Visit visit_;
};

// Work splitting: hand whole subtrees to a small pool; merging is a sum, so
// the result does not depend on scheduling.
template <typename Task>
void run_split(std::uint32_t head_max, int workers, Task task) {
  std::vector<std::uint32_t> firsts{0};
  for (std::uint32_t p = 3; p <= head_max; ++p) firsts.push_back(p);
  if (workers <= 1) {
    for (auto f : firsts) task(f, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= firsts.size()) break;
        task(firsts[idx], w);
      }
    });
  for (auto& t : pool) t.join();
}

int plan_workers(int jobs, std::uint32_t head_max) {
  const int subtrees = static_cast<int>(head_max >= 3 ? head_max - 1 : 1);
  return std::max(1, std::min(jobs, subtrees));
}

constexpr std::uint32_t kCensusMaxPart = 16;

// ---------------------------------------------------------------------------
// Census path for small part alphabets: classify heads by (s0, d0, d1) with
// distances capped at 3*max_part.  The cap is lossless: min(d0,d1) <= max
// part (a largest-first prefix sum crosses any window that wide), and when
// the head has an odd part, toggling it bounds the other parity by 3*max
// part; otherwise that parity is genuinely unreachable.
// ---------------------------------------------------------------------------
struct Census {
  std::size_t s_max;
  std::size_t dim;  // dcap + 2; last index = unreachable parity
  std::vector<std::uint64_t> w;

  Census(std::size_t s_max_, std::uint32_t max_part)
      : s_max(s_max_), dim(3ull * max_part + 2), w((s_max + 1) * dim * dim, 0) {}
};

std::vector<std::uint64_t> census_counts(std::size_t n_max, std::uint32_t max_part,
                                         bool domino_ok, int jobs) {
  const std::size_t s_max = 2 * n_max;
  const bool allow_twos = max_part >= 2;
  const std::uint32_t head_cap = static_cast<std::uint32_t>(std::min<std::size_t>(max_part, s_max));
  const int workers = plan_workers(jobs, head_cap);

  std::vector<Census> parts(static_cast<std::size_t>(workers), Census(s_max, max_part));
  const std::uint64_t dcap = parts[0].dim - 2;
  run_split(head_cap, workers, [&](std::uint32_t first, int wkr) {
    Census& cs = parts[static_cast<std::size_t>(wkr)];
    auto visit = [&cs, dcap](std::size_t s0, const std::uint64_t* bits) {
      std::uint64_t d[2];
      middle_distances(bits, s0, dcap, d);
      const std::size_t i0 = d[0] == kInf ? cs.dim - 1 : static_cast<std::size_t>(d[0]);
      const std::size_t i1 = d[1] == kInf ? cs.dim - 1 : static_cast<std::size_t>(d[1]);
      cs.w[(s0 * cs.dim + i0) * cs.dim + i1] += 1;
    };
    HeadWalk walk(s_max, head_cap, visit);
    walk.run_subtree(first);
  });
  for (int i = 1; i < workers; ++i)
    for (std::size_t j = 0; j < parts[0].w.size(); ++j)
      parts[0].w[j] += parts[static_cast<std::size_t>(i)].w[j];
  const Census& census = parts[0];

  const std::size_t dim = census.dim;
  const std::size_t inf = dim - 1;
  // Per s0 cumulative tables: joint[a][b] = heads with d0 <= a and d1 <= b,
  // where index `inf` places no bound (it absorbs unreachable parities).
  std::vector<std::uint64_t> cum_any(dim), joint(dim * dim);
  std::vector<unsigned __int128> wide(n_max + 1, 0);

  for (std::size_t s0 = 0; s0 <= s_max; ++s0) {
    std::fill(cum_any.begin(), cum_any.end(), 0);
    std::fill(joint.begin(), joint.end(), 0);
    bool empty = true;
    for (std::size_t d0 = 0; d0 < dim; ++d0)
      for (std::size_t d1 = 0; d1 < dim; ++d1) {
        const std::uint64_t c = census.w[(s0 * dim + d0) * dim + d1];
        if (!c) continue;
        empty = false;
        joint[d0 * dim + d1] += c;
        if (d0 < inf || d1 < inf) cum_any[std::min(d0, d1)] += c;
      }
    if (empty) continue;
    for (std::size_t v = 1; v < dim; ++v) cum_any[v] += cum_any[v - 1];
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 1; b < dim; ++b) joint[a * dim + b] += joint[a * dim + b - 1];
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t a = 1; a < dim; ++a) joint[a * dim + b] += joint[(a - 1) * dim + b];

    // Lookups take true tail bounds; capped finite distances are exact, so
    // clamping the bound to the last finite slot is sound.
    auto clamp_fin = [&](std::uint64_t r) { return std::min<std::uint64_t>(r, inf - 1); };
    auto heads_one = [&](int parity, std::uint64_t r) -> std::uint64_t {
      return parity == 0 ? joint[clamp_fin(r) * dim + inf] : joint[inf * dim + clamp_fin(r)];
    };
    auto heads_both = [&](std::uint64_t r0, std::uint64_t r1) -> std::uint64_t {
      return joint[clamp_fin(r0) * dim + clamp_fin(r1)];
    };

    for (std::size_t n = (s0 + 1) / 2; n <= n_max; ++n) {
      const std::uint64_t R = 2 * n - s0;
      unsigned __int128 add = 0;
      if (R >= 1) {
        const std::uint64_t hit = cum_any[clamp_fin(R)];
        const std::uint64_t per = allow_twos ? (R - 1) / 2 + 1 : 1;
        add += static_cast<unsigned __int128>(hit) * per;
      }
      if ((R & 1) == 0 && (allow_twos || R == 0)) {
        const int pn = static_cast<int>(n & 1);
        std::uint64_t ok = heads_one(pn, R);
        if (domino_ok && R >= 2) {
          ok += heads_one(1 - pn, R - 2);
          ok -= pn == 0 ? heads_both(R, R - 2) : heads_both(R - 2, R);
        }
        add += ok;
      }
      wide[n] += add;
    }
  }

  std::vector<std::uint64_t> out(n_max + 1, 0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (wide[n] > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("strip_tileable_counts: count exceeds 64 bits");
    out[n] = static_cast<std::uint64_t>(wide[n]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direct path (unbounded part alphabet): exact middle distances per head,
// then O(1) per strip length.
// ---------------------------------------------------------------------------
std::vector<std::uint64_t> direct_counts(std::size_t n_max, std::uint32_t max_part,
                                         bool domino_ok, int jobs) {
  const std::size_t s_max = 2 * n_max;
  const bool allow_twos = max_part >= 2;
  const std::uint32_t head_cap = static_cast<std::uint32_t>(std::min<std::size_t>(max_part, s_max));
  const int workers = plan_workers(jobs, head_cap);

  std::vector<std::vector<std::uint64_t>> accs(
      static_cast<std::size_t>(workers), std::vector<std::uint64_t>(n_max + 1, 0));
  run_split(head_cap, workers, [&](std::uint32_t first, int wkr) {
    auto& acc = accs[static_cast<std::size_t>(wkr)];
    auto visit = [&acc, n_max, allow_twos, domino_ok](std::size_t s0,
                                                      const std::uint64_t* bits) {
      std::uint64_t d[2];
      middle_distances(bits, s0, s0, d);
      for (std::size_t n = (s0 + 1) / 2; n <= n_max; ++n)
        acc[n] += tail_choices(2 * n - s0, d[0], d[1], n & 1, allow_twos, domino_ok);
    };
    HeadWalk walk(s_max, head_cap, visit);
    walk.run_subtree(first);
  });
  for (int i = 1; i < workers; ++i)
    for (std::size_t n = 0; n <= n_max; ++n) accs[0][n] += accs[static_cast<std::size_t>(i)][n];
  return accs[0];
}

}  // namespace

std::vector<std::uint64_t> strip_tileable_counts(std::size_t n_max, std::uint32_t max_part,
                                                 bool vertical_domino, int jobs) {
  if (max_part == 0) throw std::invalid_argument("strip_tileable_counts: max_part >= 1");
  const bool domino_ok = vertical_domino && max_part >= 2;
  if (max_part <= kCensusMaxPart) return census_counts(n_max, max_part, domino_ok, jobs);
  return direct_counts(n_max, max_part, domino_ok, jobs);
}

std::uint64_t no_subsum_count(std::uint32_t N, std::uint32_t a) {
  if (a > N) throw std::invalid_argument("no_subsum_count: need 0 <= a <= N");
  std::uint64_t cnt = 0;
  auto visit = [&](std::size_t s0, const std::uint64_t* bits) {
    const std::uint64_t R = N - s0;
    const std::size_t lo = a > R ? static_cast<std::size_t>(a - R) : 0;
    const std::size_t hi = std::min<std::size_t>(a, s0);
    if (!any_in_window(bits, lo, hi, -1)) {
      cnt += R / 2 + 1;  // every (c2, c1) tail avoids a
    } else if ((R & 1) == 0 && !any_in_window(bits, lo, hi, static_cast<int>(a & 1))) {
      cnt += 1;  // only the all-2s tail avoids it
    }
  };
  HeadWalk walk(N, N, visit);
  walk.run_all();
  return cnt;
}

}  // namespace rectcount::detail
