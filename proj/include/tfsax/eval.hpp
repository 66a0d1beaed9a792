#pragma once

#include "tfsax/audit.hpp"
#include "tfsax/dataset.hpp"
#include "tfsax/method.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tfsax {

/// Parameter grid of the evaluation protocol: w doubles from 2 up to
/// floor(n/2), alpha runs 3..10, alpha_t is fixed at 5 unless swept.
struct GridSpec {
    std::vector<std::size_t> w_values;
    std::vector<int> alpha_values;
    std::vector<int> alpha_t_values;

    static GridSpec standard(std::size_t n, bool sweep_trend_alpha = false);
};

struct GridPointResult {
    EncodeParams params;
    double fpr = 0.0;
    double ratio = 0.0;
};

struct GridResult {
    EncodeParams params;
    double fpr = 0.0;
};

/// Fraction of test series whose nearest training series (under the given
/// method) carries a different label. Ties go to the lowest train index.
double classify_1nn(const std::vector<TimeSeries>& train, const std::vector<TimeSeries>& test,
                    Method method, const EncodeParams& params, unsigned workers = 1);

/// Evaluates every grid point on the test set and returns the minimum-error
/// point; equal error rates resolve to smaller w, then alpha, then alpha_t.
/// Optionally records every evaluated point.
GridResult grid_search(const std::vector<TimeSeries>& train,
                       const std::vector<TimeSeries>& test, Method method, const GridSpec& grid,
                       unsigned workers = 1, std::vector<GridPointResult>* all_points = nullptr);

/// Same selection rule, but scored by leave-one-out error on the training set
/// only (for parameter selection that never sees the test data).
GridResult grid_search_loo(const std::vector<TimeSeries>& train, Method method,
                           const GridSpec& grid, unsigned workers = 1);

/// Stored dimensions over original dimensions: w/n, 3w/n, (2w+1)/n, 2w/n for
/// sax, esax, saxtd, tfsax; 1 for euclid.
double reduction_ratio(Method method, std::size_t w, std::size_t n);

struct BenchRow {
    std::size_t w = 0;
    double transform_seconds = 0.0;
    double classify_seconds = 0.0;

    double total_seconds() const { return transform_seconds + classify_seconds; }
};

/// Wall-clock transform + classification time per w at a fixed alpha. Each
/// stage runs `repeats` times and times are summed, so small grids still get
/// a measurable signal.
std::vector<BenchRow> bench_runtime(const Dataset& dataset, Method method,
                                    const std::vector<std::size_t>& w_values, int alpha,
                                    int alpha_t = 5, int repeats = 1);

struct MethodResult {
    Method method = Method::kSax;
    EncodeParams params;
    double fpr = 0.0;
    double ratio = 0.0;
    double transform_seconds = 0.0; // wall clock at the best parameters
    double classify_seconds = 0.0;
};

struct DatasetReport {
    std::string name;
    std::size_t length = 0;
    std::vector<MethodResult> methods;
};

struct RuntimeRow {
    std::string dataset;
    Method method = Method::kSax;
    std::size_t w = 0;
    int alpha = 10;
    double transform_seconds = 0.0;
    double classify_seconds = 0.0;
};

struct EvalReport {
    std::vector<DatasetReport> classification;
    std::vector<AuditSummaryRow> tlb;
    std::vector<RuntimeRow> runtime;
};

/// Writes summary.csv, ratio.csv, tlb.csv and runtime.csv under out_dir for
/// the sections that are present. Throws Error when the report is empty.
void emit_report(const EvalReport& report, const std::string& out_dir);

} // namespace tfsax
