#ifndef E8CAS_CACHE_HPP
#define E8CAS_CACHE_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace e8cas {

/// Content-addressed JSON cache: one file per entry, addressed by a
/// stable hash of the canonical key string. Entries carry a schema
/// version; hits must be byte-identical to recomputation.
struct CacheConfig {
    std::string dir; // empty disables caching
    bool enabled() const { return !dir.empty(); }
};

inline constexpr int kCacheSchemaVersion = 1;

/// Stable 128-bit FNV-1a hex digest of the key (addressing only).
std::string cache_address(const std::string& key);

std::optional<nlohmann::ordered_json> cache_get(const CacheConfig& cfg, const std::string& key);

/// Atomic write (temp file + rename); single writer, many readers.
void cache_put(const CacheConfig& cfg, const std::string& key, const nlohmann::ordered_json& payload);

/// All keys currently stored, sorted.
std::vector<std::string> cache_keys(const CacheConfig& cfg);

} // namespace e8cas

#endif
