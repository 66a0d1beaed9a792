#pragma once

#include "tfsax/series.hpp"

#include <cstddef>
#include <vector>

namespace tfsax {

/// Equiprobable N(0,1) breakpoints for one alphabet size, plus the derived
/// symbol distance matrix. Immutable once built; safe to share across threads.
struct BreakpointTable {
    int alpha = 0;
    std::vector<double> betas; // alpha - 1 values, strictly increasing
    std::vector<double> dist;  // alpha x alpha, row-major, 0-based storage

    /// Symbol distance lookup for 1-based symbol indices (unchecked).
    double dist_at(int i, int j) const {
        return dist[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(alpha) +
                    static_cast<std::size_t>(j - 1)];
    }
};

/// One symbol per segment; indices are 1-based in [1, alpha] and render as
/// letters 'a', 'b', ...
struct SaxWord {
    std::vector<int> symbols;
    int alpha = 0;
    std::size_t w = 0;
    std::size_t n = 0;
};

/// Inverse standard normal CDF. Rational approximation refined by one Halley
/// step; absolute error below 1e-12 over the quantiles used here.
double normal_quantile(double p);

/// Breakpoints at the k/alpha quantiles of N(0,1), k = 1..alpha-1, exactly
/// antisymmetric. Throws InvalidAlpha outside [2, 26].
BreakpointTable gaussian_breakpoints(int alpha);

/// Maps each mean to the symbol of its breakpoint interval. Intervals are
/// left-closed: a mean equal to a breakpoint takes the upper symbol.
SaxWord sax_symbolize(const PaaVector& paa_vec, const BreakpointTable& table);

/// paa + sax_symbolize.
SaxWord sax_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& table);

/// 0 for adjacent or equal symbols, else beta_{max-1} - beta_{min}.
double symbol_dist(int i, int j, const BreakpointTable& table);

/// sqrt(n/w * sum of squared symbol distances). Lower-bounds the Euclidean
/// distance between the underlying normalized series.
double mindist(const SaxWord& qw, const SaxWord& cw, const BreakpointTable& table);

/// mindist without the outer square root.
double mindist_sq(const SaxWord& qw, const SaxWord& cw, const BreakpointTable& table);

} // namespace tfsax
