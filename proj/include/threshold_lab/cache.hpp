#pragma once

#include <optional>
#include <string>

namespace tlab {

// Directory named by THRESHOLD_LAB_CACHE; nullopt when unset or empty.
std::optional<std::string> cache_dir_from_env();

// Contents of <dir>/<key>.json, or nullopt on miss.
std::optional<std::string> cache_lookup(const std::string& dir, const std::string& key);

// Atomic store: write to a temp file in the same directory, then rename.
// Creates the directory if needed; IO failures surface as FileError.
void cache_store(const std::string& dir, const std::string& key, const std::string& payload);

}  // namespace tlab
