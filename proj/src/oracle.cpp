#include "rectcount/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rectcount::oracle {

namespace {

constexpr std::size_t kAreaGuard = 30;
constexpr std::size_t kAreaGuardLarge = 36;

void check_area(std::uint32_t rows, std::uint32_t cols, bool allow_large) {
  const std::size_t area = static_cast<std::size_t>(rows) * cols;
  const std::size_t guard = allow_large ? kAreaGuardLarge : kAreaGuard;
  if (area > guard)
    throw std::invalid_argument("oracle: grid area " + std::to_string(area) +
                                " exceeds the guard (" + std::to_string(guard) +
                                "); a partial enumeration would corrupt results");
}

// Placement table: allowed[h][w] for oriented shapes, resolved once from the
// canonical filter.
std::vector<std::vector<bool>> orient_table(std::uint32_t rows, std::uint32_t cols,
                                            const BlockFilter& allow) {
  std::vector<std::vector<bool>> t(rows + 1, std::vector<bool>(cols + 1, false));
  for (std::uint32_t h = 1; h <= rows; ++h)
    for (std::uint32_t w = 1; w <= cols; ++w) t[h][w] = allow(std::min(h, w), std::max(h, w));
  return t;
}

struct Walker {
  std::uint32_t rows, cols;
  const std::vector<std::vector<bool>>& allowed;
  const std::function<void(const Grid&)>& visit;
  Grid grid;

  Walker(std::uint32_t r, std::uint32_t c, const std::vector<std::vector<bool>>& a,
         const std::function<void(const Grid&)>& v)
      : rows(r), cols(c), allowed(a), visit(v) {
    grid.rows = rows;
    grid.cols = cols;
    grid.cells.assign(static_cast<std::size_t>(rows) * cols, -1);
  }

  void set(const PlacedRect& r, int id) {
    for (std::uint32_t i = 0; i < r.h; ++i)
      for (std::uint32_t j = 0; j < r.w; ++j)
        grid.cells[(r.row + i) * cols + (r.col + j)] = id;
  }

  void place(int next_id) {
    std::uint32_t r = 0, c = 0;
    bool found = false;
    for (std::uint32_t i = 0; i < rows && !found; ++i)
      for (std::uint32_t j = 0; j < cols && !found; ++j)
        if (grid.at(i, j) < 0) {
          r = i;
          c = j;
          found = true;
        }
    if (!found) {
      visit(grid);
      return;
    }
    // every allowed h x w rectangle whose top-left corner is the first empty
    // cell; a blocked cell inside the area blocks all larger extents too
    for (std::uint32_t h = 1; r + h <= rows; ++h) {
      if (grid.at(r + h - 1, c) >= 0) break;
      for (std::uint32_t w = 1; c + w <= cols; ++w) {
        bool free = true;
        for (std::uint32_t i = 0; i < h && free; ++i)
          for (std::uint32_t j = 0; j < w && free; ++j) free = grid.at(r + i, c + j) < 0;
        if (!free) break;
        if (!allowed[h][w]) continue;
        const PlacedRect rect{r, c, h, w};
        set(rect, next_id);
        grid.rects.push_back(rect);
        place(next_id + 1);
        grid.rects.pop_back();
        set(rect, -1);
      }
    }
  }
};

// Sequential enumeration.
void enumerate_seq(std::uint32_t rows, std::uint32_t cols,
                   const std::vector<std::vector<bool>>& table,
                   const std::function<void(const Grid&)>& visit) {
  Walker w(rows, cols, table, visit);
  w.place(0);
}

// Parallel enumeration split on the first placement; each branch reports to
// its own visitor, so merging stays with the caller.
void enumerate_split(std::uint32_t rows, std::uint32_t cols,
                     const std::vector<std::vector<bool>>& table, int jobs,
                     const std::function<std::function<void(const Grid&)>(int)>& visitor_for) {
  std::vector<PlacedRect> branches;
  for (std::uint32_t h = 1; h <= rows; ++h)
    for (std::uint32_t w = 1; w <= cols; ++w)
      if (table[h][w]) branches.push_back({0, 0, h, w});

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(branches.size())));
  if (workers <= 1) {
    auto visit = visitor_for(0);
    enumerate_seq(rows, cols, table, visit);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int wk = 0; wk < workers; ++wk)
    pool.emplace_back([&, wk] {
      auto visit = visitor_for(wk);
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= branches.size()) break;
        Walker walker(rows, cols, table, visit);
        walker.set(branches[idx], 0);
        walker.grid.rects.push_back(branches[idx]);
        walker.place(1);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace

BlockFilter allow_all() {
  return [](std::uint32_t, std::uint32_t) { return true; };
}

BlockFilter allow_restricted(std::uint32_t k, std::uint32_t l) {
  return [k, l](std::uint32_t a, std::uint32_t b) {
    if (a == 1) return b <= k;
    if (a == 2) return b >= 2 && b <= l;
    return false;
  };
}

BlockFilter allow_mary(std::uint32_t m, std::uint32_t i, std::uint32_t j) {
  auto is_power_upto = [m](std::uint32_t v, std::uint32_t emax, std::uint32_t emin) {
    std::uint64_t p = 1;
    for (std::uint32_t e = 0; e <= emax; ++e) {
      if (e >= emin && p == v) return true;
      p *= m;
      if (p > v) return false;
    }
    return false;
  };
  return [=](std::uint32_t a, std::uint32_t b) {
    if (a == 1) return is_power_upto(b, i, 0);
    if (a == 2) return j >= 1 && is_power_upto(b, j, 1);
    return false;
  };
}

bool Grid::well_formed() const {
  if (cells.size() != static_cast<std::size_t>(rows) * cols) return false;
  struct Box {
    std::uint32_t rmin = ~0u, rmax = 0, cmin = ~0u, cmax = 0;
    std::size_t count = 0;
  };
  std::vector<Box> boxes;
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      const int id = at(r, c);
      if (id < 0) return false;
      if (static_cast<std::size_t>(id) >= boxes.size()) boxes.resize(id + 1);
      auto& b = boxes[static_cast<std::size_t>(id)];
      b.rmin = std::min(b.rmin, r);
      b.rmax = std::max(b.rmax, r);
      b.cmin = std::min(b.cmin, c);
      b.cmax = std::max(b.cmax, c);
      ++b.count;
    }
  for (const auto& b : boxes) {
    if (b.count == 0) continue;
    const std::size_t area =
        static_cast<std::size_t>(b.rmax - b.rmin + 1) * (b.cmax - b.cmin + 1);
    if (area != b.count) return false;
  }
  return true;
}

BlockMultiset canonical_multiset(const Grid& g) {
  BlockMultiset ms;
  ms.reserve(g.rects.size());
  for (const auto& r : g.rects) ms.emplace_back(std::min(r.h, r.w), std::max(r.h, r.w));
  std::sort(ms.begin(), ms.end());
  return ms;
}

void enumerate_tilings(std::uint32_t rows, std::uint32_t cols, const BlockFilter& allow,
                       const std::function<void(const Grid&)>& visit, bool allow_large) {
  if (rows == 0 || cols == 0) {
    Grid g;
    g.rows = rows;
    g.cols = cols;
    visit(g);
    return;
  }
  check_area(rows, cols, allow_large);
  auto table = orient_table(rows, cols, allow);
  enumerate_seq(rows, cols, table, visit);
}

Natural count_multisets(std::uint32_t rows, std::uint32_t cols, const BlockFilter& allow,
                        bool allow_large, int jobs) {
  if (rows == 0 || cols == 0) return 1;
  check_area(rows, cols, allow_large);
  auto table = orient_table(rows, cols, allow);
  std::vector<std::set<BlockMultiset>> seen(static_cast<std::size_t>(std::max(1, jobs)));
  enumerate_split(rows, cols, table, jobs, [&](int wk) {
    auto* mine = &seen[static_cast<std::size_t>(wk)];
    return std::function<void(const Grid&)>(
        [mine](const Grid& g) { mine->insert(canonical_multiset(g)); });
  });
  for (std::size_t i = 1; i < seen.size(); ++i)
    seen[0].insert(seen[i].begin(), seen[i].end());
  return Natural(static_cast<unsigned long>(seen[0].size()));
}

std::uint64_t count_tilings(std::uint32_t rows, std::uint32_t cols, const BlockFilter& allow,
                            bool allow_large) {
  if (rows == 0 || cols == 0) return 1;
  std::uint64_t n = 0;
  enumerate_tilings(rows, cols, allow, [&](const Grid&) { ++n; }, allow_large);
  return n;
}

Natural count_symmetric_multisets(std::size_t n, bool allow_one_by_two, bool allow_large) {
  if (n == 0) return 1;
  const auto cols = static_cast<std::uint32_t>(n);
  check_area(2, cols, allow_large);
  BlockFilter filter = allow_one_by_two ? allow_all()
                                        : BlockFilter([](std::uint32_t a, std::uint32_t b) {
                                            return !(a == 1 && b == 2);
                                          });
  auto table = orient_table(2, cols, filter);
  std::set<BlockMultiset> seen;
  auto visit = std::function<void(const Grid&)>([&](const Grid& g) {
    // reflect every rectangle across the horizontal midline (row swap) and
    // compare as sets of placed rectangles
    std::set<PlacedRect> placed(g.rects.begin(), g.rects.end());
    for (const auto& r : g.rects)
      if (!placed.count({2 - r.row - r.h, r.col, r.h, r.w})) return;
    seen.insert(canonical_multiset(g));
  });
  enumerate_seq(2, cols, table, visit);
  return Natural(static_cast<unsigned long>(seen.size()));
}

std::string dump_tilings(std::uint32_t rows, std::uint32_t cols, const BlockFilter& allow,
                         std::size_t max_lines, bool allow_large) {
  std::ostringstream out;
  std::size_t lines = 0;
  enumerate_tilings(
      rows, cols, allow,
      [&](const Grid& g) {
        if (lines >= max_lines) return;
        ++lines;
        for (std::size_t i = 0; i < g.cells.size(); ++i) {
          if (i) out << ' ';
          out << g.cells[i];
        }
        out << '\n';
      },
      allow_large);
  return out.str();
}

}  // namespace rectcount::oracle
