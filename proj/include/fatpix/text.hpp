#pragma once

#include <string>
#include <string_view>

namespace fatpix {

// Shortest decimal form that round-trips the exact double (via to_chars), so
// serialized files are stable and bit-exact.
std::string format_double(double v);

// Strict full-token parses; throw FormatError with the offending token.
double parse_double(std::string_view token);
long long parse_int(std::string_view token);

}  // namespace fatpix
