#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "somclass/errors.hpp"

namespace somclass {

/// Shortest decimal that parses back to the exact same double.
inline std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw Error(Errc::io_error, "double formatting failed");
    }
    return std::string(buf, ptr);
}

inline double parse_double(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(Errc::corrupt_file, "bad real number '" + std::string(text) + "'");
    }
    return value;
}

inline long parse_long(std::string_view text) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(Errc::corrupt_file, "bad integer '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace somclass
