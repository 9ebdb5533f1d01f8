#pragma once

#include <string>

namespace rse {

// Nearest multiple of 0.001, halves rounded away from zero.
double round_3dp(double v);

// Fixed three decimals with the same rounding, e.g. 0.6035 -> "0.604".
std::string render_3dp(double v);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace rse
