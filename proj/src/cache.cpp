#include "e8cas/cache.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace e8cas {

namespace fs = std::filesystem;

std::string cache_address(const std::string& key) {
    auto fnv = [&](uint64_t basis, uint64_t prime) {
        uint64_t h = basis;
        for (unsigned char c : key) {
            h ^= c;
            h *= prime;
        }
        return h;
    };
    uint64_t a = fnv(0xcbf29ce484222325ULL, 0x100000001b3ULL);
    uint64_t b = fnv(0x84222325cbf29ce4ULL, 0x100000001b3ULL);
    char buf[33];
    snprintf(buf, sizeof(buf), "%016llx%016llx", static_cast<unsigned long long>(a),
             static_cast<unsigned long long>(b));
    return buf;
}

namespace {

fs::path entry_path(const CacheConfig& cfg, const std::string& key) {
    return fs::path(cfg.dir) / (cache_address(key) + ".json");
}

} // namespace

std::optional<nlohmann::ordered_json> cache_get(const CacheConfig& cfg, const std::string& key) {
    if (!cfg.enabled()) return std::nullopt;
    fs::path p = entry_path(cfg, key);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in, nullptr, false);
    if (doc.is_discarded()) return std::nullopt;
    if (!doc.contains("schema_version") || doc["schema_version"] != kCacheSchemaVersion) return std::nullopt;
    if (!doc.contains("key") || doc["key"] != key) return std::nullopt; // address collision
    if (!doc.contains("payload")) return std::nullopt;
    return doc["payload"];
}

void cache_put(const CacheConfig& cfg, const std::string& key, const nlohmann::ordered_json& payload) {
    if (!cfg.enabled()) return;
    fs::create_directories(cfg.dir);
    nlohmann::ordered_json doc;
    doc["schema_version"] = kCacheSchemaVersion;
    doc["key"] = key;
    doc["payload"] = payload;
    fs::path final_path = entry_path(cfg, key);
    fs::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump(2) << "\n";
    }
    fs::rename(tmp, final_path);
}

std::vector<std::string> cache_keys(const CacheConfig& cfg) {
    std::vector<std::string> keys;
    if (!cfg.enabled() || !fs::exists(cfg.dir)) return keys;
    for (const auto& entry : fs::directory_iterator(cfg.dir)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        if (!in) continue;
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.contains("key")) continue;
        keys.push_back(doc["key"].get<std::string>());
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

} // namespace e8cas
