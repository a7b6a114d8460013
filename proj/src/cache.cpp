#include "chebytower/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "chebytower/serialize.hpp"

namespace chebytower {

namespace {

std::string fnv1a_hex(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string table_digest(const InvariantTable& table) {
  return fnv1a_hex(table_to_json(table).dump());
}

void save_invariant_cache(const std::filesystem::path& file, const InvariantTable& table) {
  Json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["table"] = table_to_json(table);
  j["digest"] = table_digest(table);
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw ResourceError("cannot write cache file " + file.string());
  out << j.dump(2) << '\n';
}

std::optional<InvariantTable> load_invariant_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != kCacheSchemaVersion) {
      return std::nullopt;
    }
    InvariantTable table = table_from_json(j.at("table"));
    if (!j.contains("digest") || j["digest"].get<std::string>() != table_digest(table)) {
      return std::nullopt;
    }
    // Revalidate content, not just bytes: the top column must reproduce from
    // the cached prefix.
    if (table.kmax >= 1) {
      InvariantTable prefix{table.kmax - 1,
                            {table.columns.begin(), table.columns.end() - 1}};
      if (invariants_column(prefix, table.kmax) != table.columns.back()) {
        return std::nullopt;
      }
    }
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("CHEBYTOWER_CACHE_DIR"); env && *env) {
    return env;
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "chebytower";
  }
  return std::filesystem::temp_directory_path() / "chebytower-cache";
}

}  // namespace chebytower
