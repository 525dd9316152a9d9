#pragma once

#include <string>

namespace talbot {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace talbot
