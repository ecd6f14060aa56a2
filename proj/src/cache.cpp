#include "threshold_lab/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "threshold_lab/errors.hpp"

namespace tlab {

namespace fs = std::filesystem;

std::optional<std::string> cache_dir_from_env() {
    const char* dir = std::getenv("THRESHOLD_LAB_CACHE");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::string(dir);
}

std::optional<std::string> cache_lookup(const std::string& dir, const std::string& key) {
    std::ifstream in(fs::path(dir) / (key + ".json"), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return buf.str();
}

void cache_store(const std::string& dir, const std::string& key, const std::string& payload) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw FileError("cannot create cache directory " + dir + ": " + ec.message());
    const fs::path final_path = fs::path(dir) / (key + ".json");
    const fs::path tmp_path = fs::path(dir) / (key + ".tmp");
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw FileError("cannot write cache file " + tmp_path.string());
        out << payload;
        if (!out.good()) throw FileError("short write to " + tmp_path.string());
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec) throw FileError("cannot publish cache file " + final_path.string() + ": " + ec.message());
}

}  // namespace tlab
