#pragma once

// Persistent store for memoized uniform-family counts.
//
// File layout (JSON):
//   {"version": "tautilt-cache/1",
//    "entries": [{"family": "t_lin", "r": 6, "n": 12, "value": "35862"}, ...]}
// Values are decimal strings so arbitrary precision survives the trip.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/count_engine.hpp"

namespace tautilt {

inline constexpr const char* kCacheVersion = "tautilt-cache/1";
inline constexpr const char* kCacheEnvVar = "TAUTILT_CACHE";

struct CacheEntry {
    std::string family;
    int r = 0;
    int n = 0;
    std::string value;

    bool operator==(const CacheEntry&) const = default;
};

struct CacheFile {
    std::string version = kCacheVersion;
    std::vector<CacheEntry> entries;
};

/// Parses and validates cache text. Throws std::runtime_error on malformed
/// structure, bad values or duplicate keys.
CacheFile parse_cache(const std::string& text);
std::string serialize_cache(const CacheFile& file);

CacheFile cache_from_engine(const CountEngine& engine);

struct CacheLoadResult {
    std::size_t loaded = 0;
    /// Non-empty when the file was present but ignored.
    std::string warning;
};

/// Seeds the engine from `path`. A missing file loads nothing; a corrupt
/// file or a different version tag is ignored with a warning.
CacheLoadResult cache_load(const std::filesystem::path& path, CountEngine& engine);

/// Writes every memoized value to `path` (via a temporary file + rename).
void cache_store(const std::filesystem::path& path, const CountEngine& engine);

/// The --cache flag if given, else $TAUTILT_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::string>& flag);

}  // namespace tautilt
