#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "cablefloer/cache.hpp"

namespace cablefloer {

uint64_t fnv1a64(const std::string& bytes, uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::filesystem::path default_cache_dir() {
    if (const char* e = std::getenv("CABLEFLOER_CACHE"); e && *e) return e;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "cablefloer";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "cablefloer";
    return std::filesystem::temp_directory_path() / "cablefloer";
}

std::string OutputCache::key(std::initializer_list<std::string> parts) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (auto& p : parts) {
        h = fnv1a64(std::to_string(p.size()) + ":", h);
        h = fnv1a64(p, h);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<std::string> OutputCache::load(const std::string& key) const {
    std::ifstream f(path_for(key), std::ios::binary);
    if (!f) return std::nullopt;
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool OutputCache::store(const std::string& key, const std::string& value) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return false;
    std::random_device rd;
    auto tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) return false;
        f << value;
        if (!f.flush()) {
            std::filesystem::remove(tmp, ec);
            return false;
        }
    }
    std::filesystem::rename(tmp, path_for(key), ec);
    if (!ec) return true;
    std::filesystem::remove(tmp, ec);
    return false;
}

}  // namespace cablefloer
