#pragma once

#include "tfsax/baselines.hpp"
#include "tfsax/sax.hpp"
#include "tfsax/tfsax.hpp"
#include "tfsax/trend.hpp"

#include <string>
#include <string_view>

namespace tfsax {

// Text form of the words. Mean symbols render as lowercase letters, trend
// symbols as uppercase; parsers accept either case and ignore '_' separators,
// so the "F_dE_f" suffix style round-trips.

std::string render(const SaxWord& word);                       // "feacdb"
std::string render(const TrendWord& word);                     // "EA"
std::string render(const TfsaxWord& word);                     // "bE bA"
std::string render(const EsaxWord& word);                      // "abc cba"
std::string render(const SaxTdWord& word);                     // "b(-1.5,1.5) b(0,0)"

SaxWord parse_sax_word(std::string_view text, int alpha, std::size_t n);
TrendWord parse_trend_word(std::string_view text, int alpha_t);
TfsaxWord parse_tfsax_word(std::string_view text, int alpha, int alpha_t, std::size_t n);

} // namespace tfsax
