#include "rectcount/seq_table.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace rectcount {

namespace fs = std::filesystem;
using nlohmann::json;

SeqCache SeqCache::resolve(const std::string& cli_dir) {
  SeqCache cache;
  if (!cli_dir.empty()) {
    cache.dir = cli_dir;
  } else if (const char* env = std::getenv("RECTCOUNT_CACHE"); env && *env) {
    cache.dir = env;
  } else {
    cache.dir = ".cache";
  }
  return cache;
}

std::string SeqCache::path_for(const std::string& name,
                               const std::map<std::string, std::string>& args) const {
  std::string file = name;
  for (const auto& [k, v] : args) file += "__" + k + "-" + v;
  for (auto& ch : file)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_' && ch != '.')
      ch = '_';
  return (fs::path(dir) / (file + ".json")).string();
}

std::optional<SeqTable> SeqCache::load(const std::string& name,
                                       const std::map<std::string, std::string>& args,
                                       const std::string& fingerprint,
                                       std::size_t min_last_index) const {
  std::ifstream in(path_for(name, args));
  if (!in) return std::nullopt;
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("schema_version", -1) != schema_version) return std::nullopt;
  if (doc.value("fingerprint", std::string()) != fingerprint) return std::nullopt;
  if (doc.value("name", std::string()) != name) return std::nullopt;
  if (!doc.contains("values") || !doc["values"].is_array()) return std::nullopt;
  SeqTable table;
  table.name = name;
  table.args = args;
  for (const auto& v : doc["values"]) {
    if (!v.is_string()) return std::nullopt;
    table.values.push_back(natural_from_decimal(v.get<std::string>()));
  }
  if (table.values.empty() || table.last_index() < min_last_index) return std::nullopt;
  return table;
}

void SeqCache::store(const SeqTable& table, const std::string& fingerprint) const {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;  // cache is best-effort
  json doc;
  doc["schema_version"] = schema_version;
  doc["name"] = table.name;
  doc["args"] = table.args;
  doc["fingerprint"] = fingerprint;
  json vals = json::array();
  for (const auto& v : table.values) vals.push_back(to_decimal(v));
  doc["values"] = std::move(vals);

  const std::string path = path_for(table.name, table.args);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump();
  }
  fs::rename(tmp, path, ec);
}

}  // namespace rectcount
