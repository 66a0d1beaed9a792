#pragma once

#include <charconv>
#include <string>

namespace tfsax {

/// Shortest round-trip decimal form of a double. Used for every numeric CSV
/// cell so that repeated runs emit byte-identical files.
inline std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace tfsax
