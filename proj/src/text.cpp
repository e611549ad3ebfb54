#include "fatpix/text.hpp"

#include <charconv>
#include <system_error>

#include "fatpix/error.hpp"

namespace fatpix {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token) {
    double v = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw FormatError("bad number '" + std::string(token) + "'");
    }
    return v;
}

long long parse_int(std::string_view token) {
    long long v = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw FormatError("bad integer '" + std::string(token) + "'");
    }
    return v;
}

}  // namespace fatpix
