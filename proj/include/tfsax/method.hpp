#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace tfsax {

enum class Method {
    kEuclid,
    kSax,
    kEsax,
    kSaxTd,
    kTfsax,
};

/// Symbolization parameters shared by every method. alpha_t only matters for
/// Method::kTfsax; w and alpha are ignored by Method::kEuclid.
struct EncodeParams {
    std::size_t w = 8;
    int alpha = 5;
    int alpha_t = 5;
};

constexpr std::string_view method_name(Method method) {
    switch (method) {
    case Method::kEuclid: return "euclid";
    case Method::kSax: return "sax";
    case Method::kEsax: return "esax";
    case Method::kSaxTd: return "saxtd";
    case Method::kTfsax: return "tfsax";
    }
    return "?";
}

inline std::optional<Method> method_from_string(std::string_view name) {
    if (name == "euclid") return Method::kEuclid;
    if (name == "sax") return Method::kSax;
    if (name == "esax") return Method::kEsax;
    if (name == "saxtd") return Method::kSaxTd;
    if (name == "tfsax") return Method::kTfsax;
    return std::nullopt;
}

} // namespace tfsax
