#pragma once

#include "tfsax/sax.hpp"
#include "tfsax/series.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tfsax {

/// Three symbols per segment (max, min, mean), ordered by the time each value
/// occurs within the segment.
struct EsaxWord {
    std::vector<int> symbols; // length 3w
    int alpha = 0;
    std::size_t w = 0;
    std::size_t n = 0;
};

/// SAX word plus per-segment numeric endpoint deltas
/// (start - segment mean, end - segment mean).
struct SaxTdWord {
    SaxWord sax;
    std::vector<std::pair<double, double>> deltas;
};

EsaxWord esax_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& table);

/// MINDIST over the tripled word: sqrt(n/(3w) * sum of squared symbol dists).
double esax_dist(const EsaxWord& a, const EsaxWord& b, const BreakpointTable& table);
double esax_dist_sq(const EsaxWord& a, const EsaxWord& b, const BreakpointTable& table);

SaxTdWord saxtd_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& table);

/// sqrt(n/w * sum_i [dist^2 + (w/n) * ((dqs-dcs)^2 + (dqe-dce)^2)]).
/// Always >= mindist of the shared SAX channel.
double saxtd_dist(const SaxTdWord& a, const SaxTdWord& b, const BreakpointTable& table);
double saxtd_dist_sq(const SaxTdWord& a, const SaxTdWord& b, const BreakpointTable& table);

} // namespace tfsax
