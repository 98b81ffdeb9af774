#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectcount/natural.hpp"

namespace rectcount {

// A named integer sequence over the contiguous domain [0, N], immutable once
// published.  The carrier for memoized sequences, cache files and the fitter.
struct SeqTable {
  std::string name;
  std::map<std::string, std::string> args;
  std::vector<Natural> values;

  std::size_t last_index() const { return values.empty() ? 0 : values.size() - 1; }
};

// Versioned JSON cache, one file per (sequence, args).  A fingerprint
// mismatch invalidates the entry.
struct SeqCache {
  std::string dir;
  int schema_version = 1;

  // Resolution order: explicit dir, RECTCOUNT_CACHE, local ".cache".
  static SeqCache resolve(const std::string& cli_dir);

  std::optional<SeqTable> load(const std::string& name,
                               const std::map<std::string, std::string>& args,
                               const std::string& fingerprint,
                               std::size_t min_last_index) const;
  void store(const SeqTable& table, const std::string& fingerprint) const;

  std::string path_for(const std::string& name,
                       const std::map<std::string, std::string>& args) const;
};

}  // namespace rectcount
