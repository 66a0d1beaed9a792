#include "tfsax/sax.hpp"

#include "tfsax/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tfsax {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrt2Pi = 2.50662827463100050242;

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / kSqrt2);
}

// Acklam's rational approximation of the probit function (~1e-9 absolute).
double probit_estimate(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error("normal_quantile requires p in (0, 1)");
    }
    double x = probit_estimate(p);
    // One Halley step against the erfc-based CDF.
    const double e = normal_cdf(x) - p;
    const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

BreakpointTable gaussian_breakpoints(int alpha) {
    if (alpha < 2 || alpha > 26) {
        throw InvalidAlpha("alphabet size must be in [2, 26], got " + std::to_string(alpha));
    }
    BreakpointTable table;
    table.alpha = alpha;
    table.betas.resize(static_cast<std::size_t>(alpha - 1));
    // Fill the lower half and mirror, so the table is antisymmetric to the bit.
    for (int k = 1; 2 * k <= alpha; ++k) {
        const double q = normal_quantile(static_cast<double>(k) / alpha);
        table.betas[static_cast<std::size_t>(k - 1)] = q;
        table.betas[static_cast<std::size_t>(alpha - 1 - k)] = -q;
    }
    if (alpha % 2 == 0) {
        table.betas[static_cast<std::size_t>(alpha / 2 - 1)] = 0.0;
    }

    table.dist.assign(static_cast<std::size_t>(alpha) * static_cast<std::size_t>(alpha), 0.0);
    for (int i = 1; i <= alpha; ++i) {
        for (int j = 1; j <= alpha; ++j) {
            if (std::abs(i - j) <= 1) {
                continue;
            }
            const int hi = std::max(i, j);
            const int lo = std::min(i, j);
            table.dist[static_cast<std::size_t>(i - 1) * alpha + (j - 1)] =
                table.betas[static_cast<std::size_t>(hi - 2)] -
                table.betas[static_cast<std::size_t>(lo - 1)];
        }
    }
    return table;
}

SaxWord sax_symbolize(const PaaVector& paa_vec, const BreakpointTable& table) {
    SaxWord word;
    word.alpha = table.alpha;
    word.w = paa_vec.segmentation.w;
    word.n = paa_vec.segmentation.n;
    word.symbols.reserve(paa_vec.means.size());
    for (double mean : paa_vec.means) {
        if (!std::isfinite(mean)) {
            throw Error("sax_symbolize requires finite segment means");
        }
        const auto it = std::upper_bound(table.betas.begin(), table.betas.end(), mean);
        // A mean equal to a breakpoint lands past it, i.e. in the upper symbol.
        word.symbols.push_back(static_cast<int>(it - table.betas.begin()) + 1);
    }
    return word;
}

SaxWord sax_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& table) {
    return sax_symbolize(paa(series, w), table);
}

double symbol_dist(int i, int j, const BreakpointTable& table) {
    if (i < 1 || i > table.alpha || j < 1 || j > table.alpha) {
        throw SymbolOutOfRange("symbol index outside [1, " + std::to_string(table.alpha) + "]");
    }
    return table.dist_at(i, j);
}

namespace {

void check_word_params(const SaxWord& qw, const SaxWord& cw, const BreakpointTable& table) {
    if (qw.n != cw.n || qw.w != cw.w || qw.alpha != cw.alpha ||
        qw.symbols.size() != cw.symbols.size()) {
        throw ParamMismatch("mindist requires words with identical (n, w, alpha)");
    }
    if (qw.alpha != table.alpha) {
        throw ParamMismatch("breakpoint table alphabet does not match the words");
    }
}

} // namespace

double mindist_sq(const SaxWord& qw, const SaxWord& cw, const BreakpointTable& table) {
    check_word_params(qw, cw, table);
    double sum = 0.0;
    for (std::size_t i = 0; i < qw.symbols.size(); ++i) {
        const double d = table.dist_at(qw.symbols[i], cw.symbols[i]);
        sum += d * d;
    }
    return static_cast<double>(qw.n) / static_cast<double>(qw.w) * sum;
}

double mindist(const SaxWord& qw, const SaxWord& cw, const BreakpointTable& table) {
    return std::sqrt(mindist_sq(qw, cw, table));
}

} // namespace tfsax
