#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mlpa/search.hpp"

namespace mlpa {

inline constexpr const char* kCacheEnvVar = "MLPA_CACHE_DIR";

/// Disk cache for (N, L) search results, keyed by (N, L, library version).
/// An empty directory path disables caching entirely.
struct CacheConfig {
    std::filesystem::path directory;

    bool enabled() const { return !directory.empty(); }
};

/// Resolves the cache directory: the flag wins over the environment variable,
/// and no_cache disables both.
CacheConfig resolve_cache(const std::optional<std::string>& flag_directory, bool no_cache);

std::filesystem::path cache_entry_path(const CacheConfig& cache, int total_elements, int levels);

/// nullopt on a miss. A present but unreadable or malformed entry warns on
/// stderr and is treated as a miss so the caller recomputes and overwrites.
std::optional<DesignResult> cache_load(const CacheConfig& cache, int total_elements, int levels);

/// Best effort; failure to write warns on stderr and is otherwise ignored.
void cache_store(const CacheConfig& cache, const DesignResult& result);

/// cache_load, falling back to optimize + cache_store.
DesignResult cached_optimize(const CacheConfig& cache, const DesignQuery& query, int workers = 0);

}  // namespace mlpa
