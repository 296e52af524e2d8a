#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tagtrends {

// Content hashing for fetch caching and run manifests.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

} // namespace tagtrends
