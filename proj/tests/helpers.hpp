#pragma once

#include "tfsax/random.hpp"
#include "tfsax/series.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

/// Z-normalized Gaussian random walk of length n.
inline tfsax::TimeSeries random_walk(tfsax::Rng& rng, std::size_t n) {
    tfsax::TimeSeries series;
    series.values.resize(n);
    double x = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x += rng.next_normal();
        series.values[i] = x;
    }
    return tfsax::znormalize(series);
}

inline std::vector<double> random_segment(tfsax::Rng& rng, std::size_t len) {
    std::vector<double> seg(len);
    for (double& v : seg) {
        v = rng.next_normal();
    }
    return seg;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace testutil
