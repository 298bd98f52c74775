#pragma once
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace cablefloer {

uint64_t fnv1a64(const std::string& bytes, uint64_t seed = 0xcbf29ce484222325ull);

// $CABLEFLOER_CACHE, else $XDG_CACHE_HOME/cablefloer, else ~/.cache/cablefloer.
std::filesystem::path default_cache_dir();

class OutputCache {
public:
    explicit OutputCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
    // Each part is length-prefixed so adjacent fields cannot run together.
    static std::string key(std::initializer_list<std::string> parts);
    std::optional<std::string> load(const std::string& key) const;
    // Writes to a temporary file in the cache directory, then renames; failures are reported, not thrown.
    bool store(const std::string& key, const std::string& value) const;
    std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".out"); }

private:
    std::filesystem::path dir_;
};

}  // namespace cablefloer
