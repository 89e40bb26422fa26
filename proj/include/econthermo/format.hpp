#pragma once

#include <string>

namespace econthermo {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Fixed-precision rendering for human-facing output such as SVG coordinates.
std::string format_fixed(double value, int digits);

}  // namespace econthermo
