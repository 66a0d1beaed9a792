#include "tfsax/trend.hpp"

#include "tfsax/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tfsax {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg) {
    return deg * kPi / 180.0;
}

} // namespace

std::vector<std::size_t> trend_points(std::span<const double> segment) {
    std::vector<std::size_t> points;
    if (segment.size() < 3) {
        return points;
    }
    for (std::size_t i = 1; i + 1 < segment.size(); ++i) {
        const double d1 = segment[i] - segment[i - 1];
        const double d2 = segment[i + 1] - segment[i];
        const double product = d1 * d2;
        if (product < 0.0 || (product == 0.0 && d1 != d2)) {
            points.push_back(i + 1); // 1-based position within the segment
        }
    }
    return points;
}

int trend_shape_factor(std::span<const double> segment) {
    const std::size_t count = trend_points(segment).size();
    return count == 0 ? 1 : static_cast<int>(count);
}

double trend_distance_factor(std::span<const double> segment) {
    return segment.back() - segment.front();
}

TrendFeature trend_angle(std::span<const double> segment) {
    TrendFeature feature;
    feature.td = trend_distance_factor(segment);
    feature.k = trend_shape_factor(segment);
    feature.theta_deg = std::atan(feature.td / feature.k) * 180.0 / kPi;
    return feature;
}

std::vector<TrendFeature> trend_features(std::span<const double> values,
                                         const Segmentation& seg) {
    std::vector<TrendFeature> features;
    features.reserve(seg.w);
    for (const auto& [lo, hi] : seg.bounds) {
        features.push_back(trend_angle(values.subspan(lo, hi - lo)));
    }
    return features;
}

AngleBreakpointTable angle_breakpoints(int alpha_t) {
    AngleBreakpointTable table;
    table.alpha_t = alpha_t;
    switch (alpha_t) {
    case 2: table.thetas_deg = {0.0}; break;
    case 3: table.thetas_deg = {-5.0, 5.0}; break;
    case 4: table.thetas_deg = {-30.0, 0.0, 30.0}; break;
    case 5: table.thetas_deg = {-30.0, -5.0, 5.0, 30.0}; break;
    case 6: table.thetas_deg = {-30.0, -5.0, 0.0, 5.0, 30.0}; break;
    default:
        throw UnsupportedTrendAlpha("trend alphabet size must be in [2, 6], got " +
                                    std::to_string(alpha_t));
    }

    table.dist.assign(static_cast<std::size_t>(alpha_t) * static_cast<std::size_t>(alpha_t),
                      0.0);
    for (int i = 1; i <= alpha_t; ++i) {
        for (int j = 1; j <= alpha_t; ++j) {
            if (std::abs(i - j) <= 1) {
                continue;
            }
            const int hi = std::max(i, j);
            const int lo = std::min(i, j);
            const double gap_deg = table.thetas_deg[static_cast<std::size_t>(hi - 2)] -
                                   table.thetas_deg[static_cast<std::size_t>(lo - 1)];
            table.dist[static_cast<std::size_t>(i - 1) * alpha_t + (j - 1)] =
                std::tan(deg_to_rad(gap_deg));
        }
    }
    return table;
}

TrendWord trend_symbolize(const std::vector<TrendFeature>& features,
                          const AngleBreakpointTable& table) {
    TrendWord word;
    word.alpha_t = table.alpha_t;
    word.w = features.size();
    word.symbols.reserve(features.size());
    for (const TrendFeature& f : features) {
        const auto it =
            std::upper_bound(table.thetas_deg.begin(), table.thetas_deg.end(), f.theta_deg);
        word.symbols.push_back(static_cast<int>(it - table.thetas_deg.begin()) + 1);
    }
    return word;
}

double tfdist(int i, int j, const AngleBreakpointTable& table) {
    if (i < 1 || i > table.alpha_t || j < 1 || j > table.alpha_t) {
        throw SymbolOutOfRange("trend symbol index outside [1, " +
                               std::to_string(table.alpha_t) + "]");
    }
    return table.dist_at(i, j);
}

} // namespace tfsax
