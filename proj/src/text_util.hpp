#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace surfsing::detail {

/// Drops a '#' comment and splits the remainder on whitespace.
std::vector<std::string> tokenize_line(std::string_view line);

/// Strict decimal integer; nullopt-like failure reported by returning false.
bool parse_int64(std::string_view text, std::int64_t& out);

std::string trim(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

}  // namespace surfsing::detail
