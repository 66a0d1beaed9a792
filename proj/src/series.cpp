#include "tfsax/series.hpp"

#include "tfsax/errors.hpp"

#include <cmath>
#include <string>

namespace tfsax {

void validate(const TimeSeries& series) {
    if (series.values.size() < 2) {
        throw Error("time series must have length >= 2, got " +
                    std::to_string(series.values.size()));
    }
    for (double v : series.values) {
        if (!std::isfinite(v)) {
            throw Error("time series contains a non-finite value");
        }
    }
}

TimeSeries znormalize(const TimeSeries& series, bool zeros_on_constant) {
    validate(series);
    const std::size_t n = series.values.size();
    double sum = 0.0;
    for (double v : series.values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (double v : series.values) {
        const double d = v - mean;
        sq += d * d;
    }
    const double sigma = std::sqrt(sq / static_cast<double>(n));

    TimeSeries out;
    out.label = series.label;
    out.id = series.id;
    out.values.resize(n);
    if (sigma < 1e-12) {
        if (!zeros_on_constant) {
            throw ConstantSeries("cannot normalize a constant series (sigma < 1e-12)");
        }
        return out; // all zeros
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = (series.values[i] - mean) / sigma;
    }
    return out;
}

Segmentation segment(std::size_t n, std::size_t w) {
    if (w < 1 || w > n) {
        throw InvalidW("segment count w=" + std::to_string(w) +
                       " outside [1, n=" + std::to_string(n) + "]");
    }
    Segmentation seg;
    seg.n = n;
    seg.w = w;
    seg.bounds.reserve(w);
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t lo = i * n / w;
        const std::size_t hi = (i + 1) * n / w;
        seg.bounds.emplace_back(lo, hi);
    }
    return seg;
}

PaaVector paa(const TimeSeries& series, std::size_t w) {
    validate(series);
    PaaVector out;
    out.segmentation = segment(series.values.size(), w);
    out.means.reserve(w);
    for (const auto& [lo, hi] : out.segmentation.bounds) {
        double sum = 0.0;
        for (std::size_t j = lo; j < hi; ++j) {
            sum += series.values[j];
        }
        out.means.push_back(sum / static_cast<double>(hi - lo));
    }
    return out;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("euclidean requires equal lengths, got " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double euclidean(const TimeSeries& a, const TimeSeries& b) {
    return euclidean(std::span<const double>(a.values), std::span<const double>(b.values));
}

} // namespace tfsax
