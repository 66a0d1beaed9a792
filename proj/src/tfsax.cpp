#include "tfsax/tfsax.hpp"

#include "tfsax/baselines.hpp"
#include "tfsax/errors.hpp"

#include <cmath>
#include <string>

namespace tfsax {

TfsaxWord tfsax_encode(const TimeSeries& series, std::size_t w, const BreakpointTable& bt,
                       const AngleBreakpointTable& at) {
    TfsaxWord word;
    const PaaVector paa_vec = paa(series, w);
    word.sax = sax_symbolize(paa_vec, bt);
    word.trend = trend_symbolize(trend_features(series.values, paa_vec.segmentation), at);
    word.n = series.values.size();
    return word;
}

TfsaxWord tfsax_encode(const TimeSeries& series, std::size_t w, int alpha, int alpha_t) {
    return tfsax_encode(series, w, gaussian_breakpoints(alpha), angle_breakpoints(alpha_t));
}

namespace {

void check_tfsax_params(const TfsaxWord& qw, const TfsaxWord& cw, const BreakpointTable& bt,
                        const AngleBreakpointTable& at) {
    if (qw.n != cw.n || qw.sax.w != cw.sax.w || qw.sax.alpha != cw.sax.alpha ||
        qw.trend.alpha_t != cw.trend.alpha_t || qw.sax.w != qw.trend.w ||
        cw.sax.w != cw.trend.w) {
        throw ParamMismatch("tdist requires words with identical (n, w, alpha, alpha_t)");
    }
    if (qw.sax.alpha != bt.alpha || qw.trend.alpha_t != at.alpha_t) {
        throw ParamMismatch("lookup tables do not match the word parameters");
    }
}

} // namespace

double tdist_sq(const TfsaxWord& qw, const TfsaxWord& cw, const BreakpointTable& bt,
                const AngleBreakpointTable& at) {
    check_tfsax_params(qw, cw, bt, at);
    // The SAX term is accumulated exactly as in mindist_sq, so that
    // tdist >= mindist holds without tolerance.
    double sax_sum = 0.0;
    double trend_sum = 0.0;
    for (std::size_t i = 0; i < qw.sax.symbols.size(); ++i) {
        const double d = bt.dist_at(qw.sax.symbols[i], cw.sax.symbols[i]);
        sax_sum += d * d;
        const double t = at.dist_at(qw.trend.symbols[i], cw.trend.symbols[i]);
        trend_sum += t * t;
    }
    return static_cast<double>(qw.n) / static_cast<double>(qw.sax.w) * sax_sum + trend_sum;
}

double tdist(const TfsaxWord& qw, const TfsaxWord& cw, const BreakpointTable& bt,
             const AngleBreakpointTable& at) {
    return std::sqrt(tdist_sq(qw, cw, bt, at));
}

double tlb(const TimeSeries& a, const TimeSeries& b, Method method, const EncodeParams& params) {
    const double euclid = euclidean(a, b);
    if (euclid == 0.0) {
        throw ZeroEuclidean("TLB is undefined for identical series");
    }
    double bound = 0.0;
    switch (method) {
    case Method::kSax: {
        const BreakpointTable bt = gaussian_breakpoints(params.alpha);
        bound = mindist(sax_encode(a, params.w, bt), sax_encode(b, params.w, bt), bt);
        break;
    }
    case Method::kSaxTd: {
        const BreakpointTable bt = gaussian_breakpoints(params.alpha);
        bound = saxtd_dist(saxtd_encode(a, params.w, bt), saxtd_encode(b, params.w, bt), bt);
        break;
    }
    case Method::kTfsax: {
        const BreakpointTable bt = gaussian_breakpoints(params.alpha);
        const AngleBreakpointTable at = angle_breakpoints(params.alpha_t);
        bound = tdist(tfsax_encode(a, params.w, bt, at), tfsax_encode(b, params.w, bt, at),
                      bt, at);
        break;
    }
    default:
        throw Error("tlb supports only the lower-bounding methods sax, saxtd, tfsax");
    }
    return bound / euclid;
}

} // namespace tfsax
