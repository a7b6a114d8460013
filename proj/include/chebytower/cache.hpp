#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "chebytower/invariants.hpp"

namespace chebytower {

inline constexpr int kCacheSchemaVersion = 1;

/// FNV-1a 64-bit digest (hex) over the canonical table payload. Integrity
/// check only; a mismatch forces recomputation, never silent acceptance.
std::string table_digest(const InvariantTable& table);

void save_invariant_cache(const std::filesystem::path& file, const InvariantTable& table);

/// Loads and validates: schema version, digest, and a recomputation of the
/// top column from the cached prefix. Returns nullopt when the file is
/// missing or any validation fails.
std::optional<InvariantTable> load_invariant_cache(const std::filesystem::path& file);

/// CHEBYTOWER_CACHE_DIR, else <home>/.cache/chebytower.
std::filesystem::path default_cache_dir();

}  // namespace chebytower
