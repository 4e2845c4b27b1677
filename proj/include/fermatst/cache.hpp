#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace fermatst {

// Content-addressed file cache: entries named by the hex hash of the key,
// published atomically (write to a temp file, then rename).  Payloads are
// immutable once written; corrupt entries are ignored.
class ResultCache {
  public:
    ResultCache() = default;  // disabled
    explicit ResultCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;

    // FERMATST_CACHE_DIR, overridden by the flag; empty when disabled.
    static ResultCache from_environment(const std::string& flag_dir, bool disabled);

    static std::string content_hash(const std::string& data);

  private:
    std::filesystem::path dir_;
};

}  // namespace fermatst
