#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace maintlab::csv {

/// Split one CSV row; supports double-quoted cells with "" escapes.
std::vector<std::string> split_row(std::string_view line);

/// Quote a cell when it contains a comma, quote, or newline.
std::string escape(std::string_view cell);

/// Shortest representation that round-trips the value (used so repeated runs
/// stay byte-identical).
std::string format_double(double value);

/// Fixed decimals, e.g. format_fixed(0.2333..., 3) == "0.233".
std::string format_fixed(double value, int decimals);

}  // namespace maintlab::csv
