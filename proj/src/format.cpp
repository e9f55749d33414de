#include "sgb/format.hpp"

#include <charconv>
#include <cmath>

namespace sgb {

std::string format_real(double value) {
  if (value == 0.0) return "0";  // folds -0 as well
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

}  // namespace sgb
