#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace geogap {

std::string sha256_hex(std::string_view data);

// Throws IoError if the file cannot be read.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace geogap
