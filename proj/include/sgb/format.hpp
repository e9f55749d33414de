#pragma once

#include <string>

namespace sgb {

/// Shortest-form rendering with 9 significant digits ("%.9g" without locale).
std::string format_real(double value);

}  // namespace sgb
