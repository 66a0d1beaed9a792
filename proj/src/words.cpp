#include "tfsax/words.hpp"

#include "tfsax/errors.hpp"
#include "tfsax/format.hpp"

#include <cctype>
#include <string>

namespace tfsax {

namespace {

char sax_letter(int symbol) {
    return static_cast<char>('a' + symbol - 1);
}

char trend_letter(int symbol) {
    return static_cast<char>('A' + symbol - 1);
}

int letter_to_symbol(char c, int alpha, const char* channel) {
    const int idx = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    if (idx < 1 || idx > alpha) {
        throw ParseError(std::string("symbol '") + c + "' outside the " + channel +
                         " alphabet of size " + std::to_string(alpha));
    }
    return idx;
}

// Letters only, case preserved; whitespace and '_' dropped.
std::string collect_letters(std::string_view text) {
    std::string letters;
    for (char c : text) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            letters.push_back(c);
        } else if (c != ' ' && c != '_' && c != '\t') {
            throw ParseError(std::string("unexpected character '") + c + "' in word");
        }
    }
    return letters;
}

} // namespace

std::string render(const SaxWord& word) {
    std::string out;
    out.reserve(word.symbols.size());
    for (int s : word.symbols) {
        out.push_back(sax_letter(s));
    }
    return out;
}

std::string render(const TrendWord& word) {
    std::string out;
    out.reserve(word.symbols.size());
    for (int s : word.symbols) {
        out.push_back(trend_letter(s));
    }
    return out;
}

std::string render(const TfsaxWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.sax.symbols.size(); ++i) {
        if (i > 0) {
            out.push_back(' ');
        }
        out.push_back(sax_letter(word.sax.symbols[i]));
        out.push_back(trend_letter(word.trend.symbols[i]));
    }
    return out;
}

std::string render(const EsaxWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.symbols.size(); ++i) {
        if (i > 0 && i % 3 == 0) {
            out.push_back(' ');
        }
        out.push_back(sax_letter(word.symbols[i]));
    }
    return out;
}

std::string render(const SaxTdWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.sax.symbols.size(); ++i) {
        if (i > 0) {
            out.push_back(' ');
        }
        out.push_back(sax_letter(word.sax.symbols[i]));
        out.push_back('(');
        out += format_double(word.deltas[i].first);
        out.push_back(',');
        out += format_double(word.deltas[i].second);
        out.push_back(')');
    }
    return out;
}

SaxWord parse_sax_word(std::string_view text, int alpha, std::size_t n) {
    const std::string letters = collect_letters(text);
    if (letters.empty()) {
        throw ParseError("empty sax word");
    }
    SaxWord word;
    word.alpha = alpha;
    word.w = letters.size();
    word.n = n;
    word.symbols.reserve(letters.size());
    for (char c : letters) {
        word.symbols.push_back(letter_to_symbol(c, alpha, "mean"));
    }
    return word;
}

TrendWord parse_trend_word(std::string_view text, int alpha_t) {
    const std::string letters = collect_letters(text);
    if (letters.empty()) {
        throw ParseError("empty trend word");
    }
    TrendWord word;
    word.alpha_t = alpha_t;
    word.w = letters.size();
    word.symbols.reserve(letters.size());
    for (char c : letters) {
        word.symbols.push_back(letter_to_symbol(c, alpha_t, "trend"));
    }
    return word;
}

TfsaxWord parse_tfsax_word(std::string_view text, int alpha, int alpha_t, std::size_t n) {
    const std::string letters = collect_letters(text);
    if (letters.empty() || letters.size() % 2 != 0) {
        throw ParseError("a tfsax word needs one mean and one trend letter per segment");
    }
    TfsaxWord word;
    word.n = n;
    const std::size_t w = letters.size() / 2;
    word.sax.alpha = alpha;
    word.sax.w = w;
    word.sax.n = n;
    word.trend.alpha_t = alpha_t;
    word.trend.w = w;
    for (std::size_t i = 0; i < letters.size(); i += 2) {
        word.sax.symbols.push_back(letter_to_symbol(letters[i], alpha, "mean"));
        word.trend.symbols.push_back(letter_to_symbol(letters[i + 1], alpha_t, "trend"));
    }
    return word;
}

} // namespace tfsax
