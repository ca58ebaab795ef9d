#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bibnet::text {

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
std::string to_upper_ascii(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

/// Upper-cases the first letter of each space-separated word and lower-cases
/// the rest (ASCII only).
std::string title_case(std::string_view s);

/// Splits on every occurrence of `sep`; empty pieces are kept.
std::vector<std::string_view> split(std::string_view s, std::string_view sep);

/// Decodes UTF-8 into scalar values. Invalid bytes decode to U+FFFD.
std::u32string decode_utf8(std::string_view s);

/// "%.6g": six significant digits.
std::string format_sig6(double v);
/// "%.6f": six decimals.
std::string format_fixed6(double v);
/// Rounds to six significant digits (the value `format_sig6` prints).
double round_sig6(double v);

/// Quotes a CSV cell when it contains a separator, quote or line break.
std::string csv_cell(std::string_view s);

}  // namespace bibnet::text
