#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace costcut {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

// Fixed number of significant digits (general format).
std::string format_double(double value, int significant_digits);

// Strict full-token parse; rejects trailing garbage and non-finite results.
std::optional<double> parse_double(std::string_view token);

std::vector<std::string> split(std::string_view line, char delimiter);

std::string_view trim(std::string_view s);

} // namespace costcut
