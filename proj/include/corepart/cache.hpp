#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "corepart/enumerate.hpp"
#include "corepart/serialize.hpp"

namespace corepart {

// Bumping this invalidates every existing cache entry, silently.
inline constexpr int kCacheSchemaVersion = 1;

struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = true;
};

/// Resolution order for the cache directory: explicit path (CLI flag),
/// COREPART_CACHE_DIR, then ~/.cache/corepart, then ./.corepart-cache.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("COREPART_CACHE_DIR")) return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "corepart";
    return std::filesystem::path(".corepart-cache");
}

inline std::filesystem::path cache_entry_path(const CacheConfig& config, const EnumerationQuery& query) {
    return config.dir / (hex64(fnv1a64(canonical_query_string(query))) + ".json");
}

/// Persist a finished result. Failures only warn — caching is an accelerator,
/// never a correctness dependency. The write is temp-file-then-rename, so a
/// concurrent reader sees either the old entry or the new one, never a torn one.
inline bool cache_store(const CacheConfig& config, const EnumerationQuery& query,
                        const EnumerationResult& result) {
    if (!config.enabled) return false;
    try {
        std::filesystem::create_directories(config.dir);
        Json entry;
        entry["schema_version"] = kCacheSchemaVersion;
        entry["query_string"] = canonical_query_string(query);
        entry["result"] = json_of_result(result, /*with_partitions=*/true, /*with_engine=*/true);
        const auto path = cache_entry_path(config, query);
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw std::runtime_error("cannot open " + tmp.string());
            out << entry.dump(2) << '\n';
            if (!out) throw std::runtime_error("short write to " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
        return true;
    } catch (const std::exception& e) {
        std::cerr << "corepart: warning: cache store failed: " << e.what() << "\n";
        return false;
    }
}

/// Look up a query. Any defect — missing file, unparsable JSON, stale schema,
/// or a hash collision caught by the echoed query string — is a miss; corrupt
/// entries additionally warn so recurring damage is visible.
inline std::optional<EnumerationResult> cache_load(const CacheConfig& config, const EnumerationQuery& query) {
    if (!config.enabled) return std::nullopt;
    const auto path = cache_entry_path(config, query);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        Json entry = Json::parse(in);
        if (!entry.contains("schema_version") || entry["schema_version"] != kCacheSchemaVersion)
            return std::nullopt; // older/newer writer: recompute silently
        if (entry.at("query_string") != canonical_query_string(query)) return std::nullopt;
        return result_from_json(entry.at("result"));
    } catch (const std::exception& e) {
        std::cerr << "corepart: warning: discarding corrupt cache entry " << path.string() << ": " << e.what()
                  << "\n";
        return std::nullopt;
    }
}

/// run_query with read-through caching.
inline EnumerationResult run_query_cached(const EnumerationQuery& query, const CacheConfig& config) {
    if (auto hit = cache_load(config, query)) return std::move(*hit);
    EnumerationResult result = run_query(query);
    cache_store(config, query, result);
    return result;
}

} // namespace corepart
