#pragma once

#include "tfsax/series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tfsax {

/// A labeled train/test split. Every series shares one length.
struct Dataset {
    std::string name;
    std::vector<TimeSeries> train;
    std::vector<TimeSeries> test;

    std::size_t length() const {
        return train.empty() ? (test.empty() ? 0 : test.front().size())
                             : train.front().size();
    }
};

struct LoadOptions {
    bool normalize = true;         // z-normalize each series on load
    bool zeros_on_constant = false;
};

/// Parses one UCR-format text file: one series per row, label first, fields
/// separated by commas, tabs or spaces. Gzip-compressed files are detected by
/// their magic bytes. Throws ParseError (with line number) on bad rows and
/// RaggedRows on inconsistent lengths.
std::vector<TimeSeries> load_ucr_file(const std::string& path, const LoadOptions& opts = {});

/// Loads a train/test pair into a Dataset.
Dataset load_ucr(const std::string& train_path, const std::string& test_path,
                 const std::string& name = "", const LoadOptions& opts = {});

/// Locates <name>_TRAIN / <name>_TEST under root (directly or one directory
/// down), ignoring case, underscores and common extensions, so that e.g.
/// "Two_Pattern" also matches files named TwoPatterns_TRAIN.tsv.
std::optional<std::pair<std::string, std::string>> find_ucr_pair(const std::string& root,
                                                                 const std::string& name);

/// Writes series in UCR text form (comma separated, label first).
void write_ucr_file(const std::string& path, const std::vector<TimeSeries>& series);

/// Cylinder-bell-funnel generator (labels 1, 2, 3), deterministic in seed.
std::vector<TimeSeries> gen_cbf_series(std::size_t per_class, std::size_t length,
                                       std::uint64_t seed);

/// Train/test CBF dataset; the two splits use independent streams derived
/// from the seed. Series are produced raw (not normalized).
Dataset gen_cbf(std::size_t train_per_class, std::size_t test_per_class, std::size_t length,
                std::uint64_t seed);

} // namespace tfsax
