#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rectcount::cli {

// One emitted table: exact values serialized as decimal strings.  Extra
// per-row columns (predicted residue, pass flags, ...) ride along by name.
struct OutputRecord {
  std::string sequence;
  std::map<std::string, std::string> args;
  std::vector<std::string> columns;                    // after the leading "n"
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;

  std::string to_csv() const;
  std::string to_json() const;
  std::string to_table() const;

  static OutputRecord from_csv(const std::string& text);
  static OutputRecord from_json(const std::string& text);

  bool operator==(const OutputRecord&) const = default;
};

// Entry point behind main().  Subcommands:
//   p2 | square | restricted | mary | fit | benford | asym | oracle | verify
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace rectcount::cli
