#include "tfsax/baselines.hpp"

#include "tfsax/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace tfsax {

namespace {

int symbolize_value(double value, const BreakpointTable& table) {
    const auto it = std::upper_bound(table.betas.begin(), table.betas.end(), value);
    return static_cast<int>(it - table.betas.begin()) + 1;
}

} // namespace

EsaxWord esax_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& table) {
    const PaaVector paa_vec = paa(series, w);
    EsaxWord word;
    word.alpha = table.alpha;
    word.w = w;
    word.n = series.values.size();
    word.symbols.reserve(3 * w);

    for (std::size_t s = 0; s < w; ++s) {
        const auto [lo, hi] = paa_vec.segmentation.bounds[s];
        std::size_t max_idx = lo;
        std::size_t min_idx = lo;
        for (std::size_t j = lo + 1; j < hi; ++j) {
            if (series.values[j] > series.values[max_idx]) {
                max_idx = j;
            }
            if (series.values[j] < series.values[min_idx]) {
                min_idx = j;
            }
        }
        const std::size_t mid_idx = lo + (hi - lo - 1) / 2;

        // (time index, rank) pairs; at equal indices max precedes min precedes mean.
        struct Event {
            std::size_t idx;
            int rank;
            double value;
        };
        std::array<Event, 3> events = {{{max_idx, 0, series.values[max_idx]},
                                        {min_idx, 1, series.values[min_idx]},
                                        {mid_idx, 2, paa_vec.means[s]}}};
        std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
            return a.idx != b.idx ? a.idx < b.idx : a.rank < b.rank;
        });
        for (const Event& e : events) {
            word.symbols.push_back(symbolize_value(e.value, table));
        }
    }
    return word;
}

double esax_dist_sq(const EsaxWord& a, const EsaxWord& b, const BreakpointTable& table) {
    if (a.n != b.n || a.w != b.w || a.alpha != b.alpha) {
        throw ParamMismatch("esax_dist requires words with identical (n, w, alpha)");
    }
    if (a.alpha != table.alpha) {
        throw ParamMismatch("breakpoint table alphabet does not match the words");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.symbols.size(); ++i) {
        const double d = table.dist_at(a.symbols[i], b.symbols[i]);
        sum += d * d;
    }
    return static_cast<double>(a.n) / static_cast<double>(3 * a.w) * sum;
}

double esax_dist(const EsaxWord& a, const EsaxWord& b, const BreakpointTable& table) {
    return std::sqrt(esax_dist_sq(a, b, table));
}

SaxTdWord saxtd_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& table) {
    const PaaVector paa_vec = paa(series, w);
    SaxTdWord word;
    word.sax = sax_symbolize(paa_vec, table);
    word.deltas.reserve(w);
    for (std::size_t s = 0; s < w; ++s) {
        const auto [lo, hi] = paa_vec.segmentation.bounds[s];
        const double mean = paa_vec.means[s];
        word.deltas.emplace_back(series.values[lo] - mean, series.values[hi - 1] - mean);
    }
    return word;
}

double saxtd_dist_sq(const SaxTdWord& a, const SaxTdWord& b, const BreakpointTable& table) {
    if (a.sax.n != b.sax.n || a.sax.w != b.sax.w || a.sax.alpha != b.sax.alpha) {
        throw ParamMismatch("saxtd_dist requires words with identical (n, w, alpha)");
    }
    if (a.sax.alpha != table.alpha) {
        throw ParamMismatch("breakpoint table alphabet does not match the words");
    }
    // Same accumulation split as tdist_sq: the SAX term matches mindist_sq
    // exactly, the delta term is added under the radical.
    double sax_sum = 0.0;
    double delta_sum = 0.0;
    for (std::size_t i = 0; i < a.sax.symbols.size(); ++i) {
        const double d = table.dist_at(a.sax.symbols[i], b.sax.symbols[i]);
        sax_sum += d * d;
        const double ds = a.deltas[i].first - b.deltas[i].first;
        const double de = a.deltas[i].second - b.deltas[i].second;
        delta_sum += ds * ds + de * de;
    }
    return static_cast<double>(a.sax.n) / static_cast<double>(a.sax.w) * sax_sum + delta_sum;
}

double saxtd_dist(const SaxTdWord& a, const SaxTdWord& b, const BreakpointTable& table) {
    return std::sqrt(saxtd_dist_sq(a, b, table));
}

} // namespace tfsax
