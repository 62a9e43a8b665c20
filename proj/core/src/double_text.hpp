#pragma once

// Internal helpers: shortest round-trip double formatting for the text
// formats, and strict parsing back. Not part of the installed headers.

#include <charconv>
#include <string>
#include <system_error>

#include "narranet/errors.hpp"

namespace narranet::detail {

inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DataError(what + " is not a number: '" + text + "'");
    }
    return v;
}

}  // namespace narranet::detail
