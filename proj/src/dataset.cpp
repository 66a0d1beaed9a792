#include "tfsax/dataset.hpp"

#include "tfsax/errors.hpp"
#include "tfsax/format.hpp"
#include "tfsax/random.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#if defined(TFSAX_HAS_ZLIB)
#include <zlib.h>
#endif

namespace tfsax {

namespace {

bool is_gzip(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    unsigned char magic[2] = {0, 0};
    in.read(reinterpret_cast<char*>(magic), 2);
    return in.gcount() == 2 && magic[0] == 0x1f && magic[1] == 0x8b;
}

std::string read_all(const std::string& path) {
    if (!std::filesystem::exists(path)) {
        throw IoError("no such file: " + path);
    }
    if (is_gzip(path)) {
#if defined(TFSAX_HAS_ZLIB)
        gzFile gz = gzopen(path.c_str(), "rb");
        if (gz == nullptr) {
            throw IoError("cannot open gzip file: " + path);
        }
        std::string out;
        char buf[1 << 16];
        int got = 0;
        while ((got = gzread(gz, buf, sizeof(buf))) > 0) {
            out.append(buf, static_cast<std::size_t>(got));
        }
        const bool bad = got < 0;
        gzclose(gz);
        if (bad) {
            throw IoError("gzip read error in " + path);
        }
        return out;
#else
        throw IoError("gzip input is not supported in this build: " + path);
#endif
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool is_separator(char c) {
    return c == ',' || c == '\t' || c == ' ';
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_separator(line[i])) {
            ++i;
        }
        if (i > start) {
            fields.push_back(line.substr(start, i - start));
        }
    }
    return fields;
}

double parse_number(std::string_view field, const std::string& path, std::size_t line_no) {
    // UCR files mix plain and scientific notation; strtod handles both.
    std::string tmp(field);
    char* end = nullptr;
    const double value = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size() || !std::isfinite(value)) {
        throw ParseError(path + ":" + std::to_string(line_no) + ": bad number '" + tmp + "'");
    }
    return value;
}

std::string normalize_stem(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c != '_' && c != '-') {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

// Strips a trailing _TRAIN/_TEST plus extensions from a file name; returns the
// dataset stem and which split it is.
struct SplitName {
    std::string stem;
    bool is_train = false;
    bool is_test = false;
};

SplitName classify_file(const std::filesystem::path& p) {
    std::string base = p.filename().string();
    for (const char* ext : {".gz", ".txt", ".tsv", ".csv"}) {
        if (base.size() > std::strlen(ext) &&
            base.compare(base.size() - std::strlen(ext), std::strlen(ext), ext) == 0) {
            base.resize(base.size() - std::strlen(ext));
        }
    }
    SplitName out;
    const std::string lower = normalize_stem(base);
    const auto ends_with = [&lower](std::string_view suffix) {
        return lower.size() > suffix.size() &&
               lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with("train")) {
        out.is_train = true;
        out.stem = lower.substr(0, lower.size() - 5);
    } else if (ends_with("test")) {
        out.is_test = true;
        out.stem = lower.substr(0, lower.size() - 4);
    }
    return out;
}

} // namespace

std::vector<TimeSeries> load_ucr_file(const std::string& path, const LoadOptions& opts) {
    const std::string content = read_all(path);
    std::vector<TimeSeries> out;
    std::size_t expected_len = 0;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos) {
            end = content.size();
        }
        std::string_view line(content.data() + start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        start = end + 1;
        ++line_no;
        if (end == content.size() && line.empty()) {
            break;
        }
        const auto fields = split_fields(line);
        if (fields.empty()) {
            continue; // blank line
        }
        if (fields.size() < 3) {
            throw ParseError(path + ":" + std::to_string(line_no) +
                             ": a row needs a label and at least 2 values");
        }
        TimeSeries series;
        const double label_value = parse_number(fields[0], path, line_no);
        series.label = static_cast<int>(std::llround(label_value));
        series.values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            series.values.push_back(parse_number(fields[i], path, line_no));
        }
        if (expected_len == 0) {
            expected_len = series.values.size();
        } else if (series.values.size() != expected_len) {
            throw RaggedRows(path + ":" + std::to_string(line_no) + ": row has " +
                             std::to_string(series.values.size()) + " values, expected " +
                             std::to_string(expected_len));
        }
        if (opts.normalize) {
            series = znormalize(series, opts.zeros_on_constant);
        }
        out.push_back(std::move(series));
    }
    if (out.empty()) {
        throw ParseError(path + ": no data rows");
    }
    return out;
}

namespace {

// "Beef_TRAIN" / "cbf_train" -> "Beef" / "cbf".
std::string dataset_name_from(const std::string& train_path) {
    std::string stem = std::filesystem::path(train_path).stem().string();
    std::string lower = stem;
    for (char& c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (lower.size() > 5 && lower.compare(lower.size() - 5, 5, "train") == 0) {
        stem.resize(stem.size() - 5);
        while (!stem.empty() && (stem.back() == '_' || stem.back() == '-')) {
            stem.pop_back();
        }
    }
    return stem.empty() ? "dataset" : stem;
}

} // namespace

Dataset load_ucr(const std::string& train_path, const std::string& test_path,
                 const std::string& name, const LoadOptions& opts) {
    Dataset ds;
    ds.name = name.empty() ? dataset_name_from(train_path) : name;
    ds.train = load_ucr_file(train_path, opts);
    ds.test = load_ucr_file(test_path, opts);
    if (ds.train.front().size() != ds.test.front().size()) {
        throw RaggedRows("train and test series lengths differ for dataset " + ds.name);
    }
    return ds;
}

std::optional<std::pair<std::string, std::string>> find_ucr_pair(const std::string& root,
                                                                 const std::string& name) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) {
        return std::nullopt;
    }
    const std::string want = normalize_stem(name);
    // Accept a trailing plural difference, e.g. Two_Pattern vs TwoPatterns.
    const auto matches = [&want](const std::string& stem) {
        return stem == want || stem + "s" == want || stem == want + "s";
    };
    std::string train_path;
    std::string test_path;

    const auto consider = [&](const fs::path& p) {
        if (!fs::is_regular_file(p)) {
            return;
        }
        const SplitName sn = classify_file(p);
        if (!matches(sn.stem)) {
            return;
        }
        if (sn.is_train && train_path.empty()) {
            train_path = p.string();
        } else if (sn.is_test && test_path.empty()) {
            test_path = p.string();
        }
    };

    for (const auto& entry : fs::directory_iterator(root)) {
        consider(entry.path());
        if (entry.is_directory()) {
            for (const auto& inner : fs::directory_iterator(entry.path())) {
                consider(inner.path());
            }
        }
    }
    if (train_path.empty() || test_path.empty()) {
        return std::nullopt;
    }
    return std::make_pair(train_path, test_path);
}

void write_ucr_file(const std::string& path, const std::vector<TimeSeries>& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write file: " + path);
    }
    for (const TimeSeries& s : series) {
        out << (s.label ? *s.label : 0);
        for (double v : s.values) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

std::vector<TimeSeries> gen_cbf_series(std::size_t per_class, std::size_t length,
                                       std::uint64_t seed) {
    if (length < 16) {
        throw Error("cbf generation needs length >= 16");
    }
    Rng rng(seed);
    std::vector<TimeSeries> out;
    out.reserve(3 * per_class);
    // Event window bounds follow the usual construction for length 128
    // (onset in [16, 32], duration in [32, 96]), scaled to other lengths.
    const std::uint64_t onset_lo = length / 8;
    const std::uint64_t onset_hi = length / 4;
    const std::uint64_t dur_lo = length / 4;
    const std::uint64_t dur_hi = (3 * length) / 4;

    for (int label = 1; label <= 3; ++label) {
        for (std::size_t k = 0; k < per_class; ++k) {
            const std::size_t a = rng.next_range(onset_lo, onset_hi);
            const std::size_t b =
                std::min<std::size_t>(length, a + rng.next_range(dur_lo, dur_hi));
            const double plateau = 6.0 + rng.next_normal();

            TimeSeries series;
            series.label = label;
            series.values.resize(length);
            for (std::size_t t = 0; t < length; ++t) {
                double shape = 0.0;
                if (t >= a && t < b) {
                    const double span = static_cast<double>(b - a);
                    switch (label) {
                    case 1: shape = plateau; break;                                    // cylinder
                    case 2: shape = plateau * static_cast<double>(t - a + 1) / span; break; // bell
                    default: shape = plateau * static_cast<double>(b - t) / span; break;    // funnel
                    }
                }
                series.values[t] = shape + rng.next_normal();
            }
            out.push_back(std::move(series));
        }
    }
    return out;
}

Dataset gen_cbf(std::size_t train_per_class, std::size_t test_per_class, std::size_t length,
                std::uint64_t seed) {
    Dataset ds;
    ds.name = "cbf";
    ds.train = gen_cbf_series(train_per_class, length, seed);
    ds.test = gen_cbf_series(test_per_class, length, seed ^ 0x9e3779b97f4a7c15ull);
    return ds;
}

} // namespace tfsax
