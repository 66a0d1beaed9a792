#pragma once

#include "tfsax/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tfsax {

/// Per-segment trend descriptor: the vertical and horizontal edges of the
/// trend feature triangle and the resulting angle.
struct TrendFeature {
    double td = 0.0;        // last - first, in normalized value units
    int k = 1;              // max(1, number of trend points)
    double theta_deg = 0.0; // atan(td / k), degrees, in (-90, 90)
};

/// Fixed angle breakpoints for one trend alphabet size, plus the derived
/// trend symbol distance matrix.
struct AngleBreakpointTable {
    int alpha_t = 0;
    std::vector<double> thetas_deg; // alpha_t - 1 values, strictly increasing
    std::vector<double> dist;       // alpha_t x alpha_t, row-major

    double dist_at(int i, int j) const {
        return dist[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(alpha_t) +
                    static_cast<std::size_t>(j - 1)];
    }
};

/// One trend symbol per segment; indices are 1-based in [1, alpha_t] and
/// render as letters 'A', 'B', ...
struct TrendWord {
    std::vector<int> symbols;
    int alpha_t = 0;
    std::size_t w = 0;
};

/// Interior turning points: 1-based positions i (2 <= i <= len-1) where the
/// consecutive first differences change sign, or where one of them is zero
/// and they are unequal. A segment of length 2 has none.
std::vector<std::size_t> trend_points(std::span<const double> segment);

/// max(1, number of trend points); 1 for monotone and constant segments.
int trend_shape_factor(std::span<const double> segment);

/// last - first. The mean-relative deltas of the endpoints cancel.
double trend_distance_factor(std::span<const double> segment);

/// Assembles the trend feature triangle for one segment.
TrendFeature trend_angle(std::span<const double> segment);

/// Trend features of every segment, computed on the original points (not on
/// the PAA means).
std::vector<TrendFeature> trend_features(std::span<const double> values,
                                         const Segmentation& seg);

/// The fixed multi-resolution angle table; throws UnsupportedTrendAlpha
/// outside [2, 6].
AngleBreakpointTable angle_breakpoints(int alpha_t);

/// Angle-interval lookup with the same left-closed boundary rule as the SAX
/// channel.
TrendWord trend_symbolize(const std::vector<TrendFeature>& features,
                          const AngleBreakpointTable& table);

/// 0 for adjacent or equal symbols, else tan(theta_{max-1} - theta_{min}).
double tfdist(int i, int j, const AngleBreakpointTable& table);

} // namespace tfsax
