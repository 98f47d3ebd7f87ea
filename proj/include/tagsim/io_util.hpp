#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tagsim {

// Shortest decimal form that round-trips a double exactly (%.17g).
std::string fmt17(double x);

// Compact human-facing float formatting (%g).
std::string fmtg(double x);

// Strict double parse; throws tagsim::DataError on trailing garbage.
double parse_double(std::string_view s);
long long parse_int(std::string_view s);

std::vector<std::string_view> split(std::string_view line, char sep);

// FNV-1a 64-bit, used for artifact cache keys.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace tagsim
