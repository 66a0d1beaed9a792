#pragma once

#include "tfsax/errors.hpp"

#include <charconv>
#include <cstddef>
#include <string_view>
#include <vector>

namespace tfsax {

/// Sweep syntax for CLI parameter ranges:
///   "8"        -> {8}
///   "3:10"     -> {3, 4, ..., 10}
///   "2:64:x2"  -> {2, 4, 8, 16, 32, 64}
inline std::vector<std::size_t> parse_sweep(std::string_view text) {
    const auto parse_int = [&](std::string_view field) {
        std::size_t value = 0;
        const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
        if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
            throw ParseError("bad sweep '" + std::string(text) + "'");
        }
        return value;
    };

    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t colon = text.find(':', start);
        if (colon == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }

    std::vector<std::size_t> values;
    if (parts.size() == 1) {
        values.push_back(parse_int(parts[0]));
        return values;
    }
    if (parts.size() != 2 && parts.size() != 3) {
        throw ParseError("bad sweep '" + std::string(text) + "'");
    }
    const std::size_t lo = parse_int(parts[0]);
    const std::size_t hi = parse_int(parts[1]);
    if (lo == 0 || hi < lo) {
        throw ParseError("bad sweep bounds in '" + std::string(text) + "'");
    }
    if (parts.size() == 2) {
        for (std::size_t v = lo; v <= hi; ++v) {
            values.push_back(v);
        }
        return values;
    }
    if (parts[2].size() < 2 || parts[2][0] != 'x') {
        throw ParseError("bad sweep step in '" + std::string(text) + "'");
    }
    const std::size_t factor = parse_int(parts[2].substr(1));
    if (factor < 2) {
        throw ParseError("multiplicative sweep step must be >= 2");
    }
    for (std::size_t v = lo; v <= hi; v *= factor) {
        values.push_back(v);
    }
    return values;
}

} // namespace tfsax
