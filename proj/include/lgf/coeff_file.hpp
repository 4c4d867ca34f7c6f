#pragma once

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "lgf/bigrat.hpp"

namespace lgf {

// Coefficient text format: one integer per line, line i holds f(i). Blank lines
// and everything after '#' are ignored. Malformed lines raise ParseError with
// the 1-based physical line number.
std::vector<BigInt> read_coefficients(std::istream& in);
std::vector<BigInt> read_coefficients(const std::filesystem::path& path);

/// Comma separated integers, e.g. "1,-2,3". Position in the list is reported
/// as the ParseError line.
std::vector<BigInt> parse_inline_coefficients(std::string_view text);

}  // namespace lgf
