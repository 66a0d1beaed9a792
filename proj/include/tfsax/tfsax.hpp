#pragma once

#include "tfsax/method.hpp"
#include "tfsax/sax.hpp"
#include "tfsax/series.hpp"
#include "tfsax/trend.hpp"

#include <cstddef>

namespace tfsax {

/// Two-channel word: SAX symbols for segment means, trend symbols for segment
/// shapes. Both channels share the segmentation.
struct TfsaxWord {
    SaxWord sax;
    TrendWord trend;
    std::size_t n = 0;
};

/// Encodes a (z-normalized) series. The SAX channel comes from the PAA means;
/// the trend channel comes from the original points of each segment.
TfsaxWord tfsax_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& bt,
                       const AngleBreakpointTable& at);

/// Convenience overload building the tables on the fly.
TfsaxWord tfsax_encode(const TimeSeries& series, std::size_t w, int alpha, int alpha_t);

/// sqrt(n/w * sum_i [dist(q_i, c_i)^2 + (w/n) * tfdist(tq_i, tc_i)^2]).
/// Always >= mindist of the SAX channels; the trend term adds exactly
/// sum of squared tfdist values under the radical.
double tdist(const TfsaxWord& qw, const TfsaxWord& cw, const BreakpointTable& bt,
             const AngleBreakpointTable& at);

/// tdist without the outer square root.
double tdist_sq(const TfsaxWord& qw, const TfsaxWord& cw, const BreakpointTable& bt,
                const AngleBreakpointTable& at);

/// Tightness of lower bound: lower-bounding distance / Euclidean distance.
/// Supported methods: kSax (mindist), kSaxTd, kTfsax (tdist). Both series must
/// be z-normalized already. Throws ZeroEuclidean for identical series.
double tlb(const TimeSeries& a, const TimeSeries& b, Method method, const EncodeParams& params);

} // namespace tfsax
