#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rectcount/natural.hpp"

namespace rectcount::oracle {

// Canonical block dimensions: (a, b) with a <= b, so k x l and l x k are the
// same block.
using Block = std::pair<std::uint32_t, std::uint32_t>;

// Predicate over canonical blocks; receives (min(h,w), max(h,w)).
using BlockFilter = std::function<bool(std::uint32_t, std::uint32_t)>;

BlockFilter allow_all();
// 1xi with i <= k, 2xj with 2 <= j <= l.
BlockFilter allow_restricted(std::uint32_t k, std::uint32_t l);
// 1x m^t with t <= i, 2x m^t with 1 <= t <= j.
BlockFilter allow_mary(std::uint32_t m, std::uint32_t i, std::uint32_t j);

// One placed rectangle: top-left (row, col), h rows by w cols.
struct PlacedRect {
  std::uint32_t row, col, h, w;
  auto operator<=>(const PlacedRect&) const = default;
};

struct Grid {
  std::uint32_t rows = 0, cols = 0;
  std::vector<int> cells;  // block id per cell, row-major
  std::vector<PlacedRect> rects;

  int at(std::uint32_t r, std::uint32_t c) const { return cells[r * cols + c]; }
  bool well_formed() const;  // every id region is a full rectangle
};

// Multiset of canonical blocks, sorted; the deduplication key.
using BlockMultiset = std::vector<Block>;

BlockMultiset canonical_multiset(const Grid& g);

// First-empty-cell backtracking over all complete tilings of rows x cols.
// Every geometric tiling is visited exactly once.  The area guard is a hard
// error: rows*cols <= 30, or 36 with allow_large.
void enumerate_tilings(std::uint32_t rows, std::uint32_t cols, const BlockFilter& allow,
                       const std::function<void(const Grid&)>& visit,
                       bool allow_large = false);

// Number of distinct canonical block multisets over all complete tilings.
Natural count_multisets(std::uint32_t rows, std::uint32_t cols, const BlockFilter& allow,
                        bool allow_large = false, int jobs = 1);

// Number of tilings (arrangements); recorded as regression data only.
std::uint64_t count_tilings(std::uint32_t rows, std::uint32_t cols,
                            const BlockFilter& allow, bool allow_large = false);

// Multisets of a 2xn strip that admit at least one arrangement invariant
// under reflection across the horizontal midline.  With allow_one_by_two
// false, multisets containing any 1x2 block are excluded (the S(n) variant);
// true admits them (the T(n) variant).
Natural count_symmetric_multisets(std::size_t n, bool allow_one_by_two,
                                  bool allow_large = false);

// Debug dump: one tiling per line, cell block ids row-major.
std::string dump_tilings(std::uint32_t rows, std::uint32_t cols, const BlockFilter& allow,
                         std::size_t max_lines, bool allow_large = false);

}  // namespace rectcount::oracle
