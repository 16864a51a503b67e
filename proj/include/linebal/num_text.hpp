#pragma once

#include <string>

namespace linebal {

/// Shortest decimal text that parses back to exactly `v`. Locale-free.
std::string double_text(double v);

/// Fixed-point text with `places` decimals. Locale-free.
std::string fixed_text(double v, int places);

/// Parses a full token as a double/int; returns false on any leftover
/// characters. Locale-free.
bool parse_double_text(const std::string& text, double& out);
bool parse_int_text(const std::string& text, int& out);

}  // namespace linebal
