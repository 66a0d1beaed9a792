#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tfsax {

/// A finite numeric sequence with an optional class label. All operations
/// require length >= 2 and finite values.
struct TimeSeries {
    std::vector<double> values;
    std::optional<int> label;
    std::string id;

    std::size_t size() const { return values.size(); }
};

/// Contiguous near-equal partition of [0, n) into w half-open index ranges.
/// Segment lengths differ by at most one.
struct Segmentation {
    std::size_t n = 0;
    std::size_t w = 0;
    std::vector<std::pair<std::size_t, std::size_t>> bounds;
};

struct PaaVector {
    std::vector<double> means;
    Segmentation segmentation;
};

/// Throws Error when the series violates the length/finiteness invariants.
void validate(const TimeSeries& series);

/// Rescales to mean 0 and population standard deviation 1. A series whose
/// standard deviation is below 1e-12 throws ConstantSeries unless
/// zeros_on_constant is set, in which case every sample becomes 0.
TimeSeries znormalize(const TimeSeries& series, bool zeros_on_constant = false);

/// Segment i covers [floor(i*n/w), floor((i+1)*n/w)). Throws InvalidW unless
/// 1 <= w <= n.
Segmentation segment(std::size_t n, std::size_t w);

/// Per-segment arithmetic means. The caller decides whether the series is
/// normalized first.
PaaVector paa(const TimeSeries& series, std::size_t w);

double euclidean(std::span<const double> a, std::span<const double> b);
double euclidean(const TimeSeries& a, const TimeSeries& b);

} // namespace tfsax
