#include "fermatst/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fermatst {

namespace {

// two independent FNV-1a passes, 128 hex bits total
uint64_t fnv1a(const std::string& s, uint64_t basis) {
    uint64_t h = basis;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex128(const std::string& s) {
    char buf[33];
    snprintf(buf, sizeof buf, "%016llx%016llx", (unsigned long long)fnv1a(s, 0xcbf29ce484222325ULL),
             (unsigned long long)fnv1a(s, 0x84222325cbf29ce4ULL));
    return buf;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string ResultCache::content_hash(const std::string& data) { return hex128(data); }

std::optional<std::string> ResultCache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::filesystem::path file = dir_ / (hex128(key) + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        std::string payload = j.at("payload").get<std::string>();
        if (j.at("hash").get<std::string>() != hex128(payload)) return std::nullopt;  // corrupt: recompute
        return payload;
    } catch (...) {
        return std::nullopt;
    }
}

void ResultCache::put(const std::string& key, const std::string& payload) const {
    if (!enabled()) return;
    std::filesystem::path file = dir_ / (hex128(key) + ".json");
    if (std::filesystem::exists(file)) return;  // immutable entries
    nlohmann::json j;
    j["key"] = key;
    j["hash"] = hex128(payload);
    j["payload"] = payload;
    std::filesystem::path tmp = file;
    tmp += ".tmp." + std::to_string((unsigned long)::getpid());
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file, ec);  // atomic publish
    if (ec) std::filesystem::remove(tmp, ec);
}

ResultCache ResultCache::from_environment(const std::string& flag_dir, bool disabled) {
    if (disabled) return ResultCache();
    if (!flag_dir.empty()) return ResultCache(flag_dir);
    const char* env = std::getenv("FERMATST_CACHE_DIR");
    if (env && *env) return ResultCache(env);
    return ResultCache();
}

}  // namespace fermatst
