#include "rse/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace rse {

double round_3dp(double v) {
  return static_cast<double>(std::llround(v * 1000.0)) / 1000.0;
}

std::string render_3dp(double v) {
  long long thousandths = std::llround(v * 1000.0);
  std::string out = thousandths < 0 ? "-" : "";
  long long magnitude = std::llabs(thousandths);
  out += std::to_string(magnitude / 1000);
  std::string frac = std::to_string(magnitude % 1000);
  out += '.' + std::string(3 - frac.size(), '0') + frac;
  return out;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace rse
