#include "tfsax/eval.hpp"

#include "tfsax/baselines.hpp"
#include "tfsax/errors.hpp"
#include "tfsax/format.hpp"
#include "tfsax/parallel.hpp"
#include "tfsax/tfsax.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>

namespace tfsax {

namespace {

struct EncodedSet {
    const std::vector<TimeSeries>* raw = nullptr; // euclid only
    std::vector<SaxWord> sax;
    std::vector<EsaxWord> esax;
    std::vector<SaxTdWord> saxtd;
    std::vector<TfsaxWord> tfsax_words;
    std::vector<int> labels;
};

std::vector<int> collect_labels(const std::vector<TimeSeries>& series) {
    std::vector<int> labels;
    labels.reserve(series.size());
    for (const TimeSeries& s : series) {
        if (!s.label) {
            throw Error("classification requires labeled series");
        }
        labels.push_back(*s.label);
    }
    return labels;
}

EncodedSet encode_set(const std::vector<TimeSeries>& series, Method method,
                      const EncodeParams& params, const BreakpointTable& bt,
                      const AngleBreakpointTable& at) {
    EncodedSet enc;
    enc.labels = collect_labels(series);
    switch (method) {
    case Method::kEuclid:
        enc.raw = &series;
        break;
    case Method::kSax:
        enc.sax.reserve(series.size());
        for (const TimeSeries& s : series) {
            enc.sax.push_back(sax_encode(s, params.w, bt));
        }
        break;
    case Method::kEsax:
        enc.esax.reserve(series.size());
        for (const TimeSeries& s : series) {
            enc.esax.push_back(esax_encode(s, params.w, bt));
        }
        break;
    case Method::kSaxTd:
        enc.saxtd.reserve(series.size());
        for (const TimeSeries& s : series) {
            enc.saxtd.push_back(saxtd_encode(s, params.w, bt));
        }
        break;
    case Method::kTfsax:
        enc.tfsax_words.reserve(series.size());
        for (const TimeSeries& s : series) {
            enc.tfsax_words.push_back(tfsax_encode(s, params.w, bt, at));
        }
        break;
    }
    return enc;
}

double euclid_sq(const TimeSeries& a, const TimeSeries& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        sum += d * d;
    }
    return sum;
}

/// Generic 1-NN error count. dist2(query_index, train_index) must be a
/// squared distance; skip_self excludes train_index == query_index for
/// leave-one-out runs. The scan order makes ties resolve to the lowest
/// train index for any worker count.
template <typename Dist2>
std::size_t nn_errors(const std::vector<int>& train_labels,
                      const std::vector<int>& query_labels, bool skip_self, Dist2&& dist2,
                      unsigned workers) {
    std::vector<unsigned char> wrong(query_labels.size(), 0);
    parallel_for(query_labels.size(), workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t q = lo; q < hi; ++q) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_index = 0;
            for (std::size_t t = 0; t < train_labels.size(); ++t) {
                if (skip_self && t == q) {
                    continue;
                }
                const double d = dist2(q, t);
                if (d < best) {
                    best = d;
                    best_index = t;
                }
            }
            wrong[q] = train_labels[best_index] != query_labels[q] ? 1 : 0;
        }
    });
    std::size_t errors = 0;
    for (unsigned char v : wrong) {
        errors += v;
    }
    return errors;
}

std::size_t count_errors(const EncodedSet& train, const EncodedSet& query, Method method,
                         bool skip_self, const BreakpointTable& bt,
                         const AngleBreakpointTable& at, unsigned workers) {
    switch (method) {
    case Method::kEuclid:
        return nn_errors(
            train.labels, query.labels, skip_self,
            [&](std::size_t q, std::size_t t) {
                return euclid_sq((*query.raw)[q], (*train.raw)[t]);
            },
            workers);
    case Method::kSax:
        return nn_errors(
            train.labels, query.labels, skip_self,
            [&](std::size_t q, std::size_t t) { return mindist_sq(query.sax[q], train.sax[t], bt); },
            workers);
    case Method::kEsax:
        return nn_errors(
            train.labels, query.labels, skip_self,
            [&](std::size_t q, std::size_t t) {
                return esax_dist_sq(query.esax[q], train.esax[t], bt);
            },
            workers);
    case Method::kSaxTd:
        return nn_errors(
            train.labels, query.labels, skip_self,
            [&](std::size_t q, std::size_t t) {
                return saxtd_dist_sq(query.saxtd[q], train.saxtd[t], bt);
            },
            workers);
    case Method::kTfsax:
        return nn_errors(
            train.labels, query.labels, skip_self,
            [&](std::size_t q, std::size_t t) {
                return tdist_sq(query.tfsax_words[q], train.tfsax_words[t], bt, at);
            },
            workers);
    }
    throw Error("unknown method");
}

void check_classification_inputs(const std::vector<TimeSeries>& train,
                                 const std::vector<TimeSeries>& test) {
    if (train.empty()) {
        throw EmptyDataset("classification needs a nonempty training set");
    }
    const std::size_t n = train.front().size();
    for (const TimeSeries& s : train) {
        if (s.size() != n) {
            throw LengthMismatch("training series lengths differ");
        }
    }
    for (const TimeSeries& s : test) {
        if (s.size() != n) {
            throw LengthMismatch("test series length differs from training length");
        }
    }
}

struct Tables {
    BreakpointTable bt;
    AngleBreakpointTable at;
};

Tables make_tables(Method method, const EncodeParams& params) {
    Tables t;
    if (method != Method::kEuclid) {
        t.bt = gaussian_breakpoints(params.alpha);
    }
    if (method == Method::kTfsax) {
        t.at = angle_breakpoints(params.alpha_t);
    }
    return t;
}

} // namespace

GridSpec GridSpec::standard(std::size_t n, bool sweep_trend_alpha) {
    GridSpec grid;
    for (std::size_t w = 2; w <= n / 2; w *= 2) {
        grid.w_values.push_back(w);
    }
    for (int alpha = 3; alpha <= 10; ++alpha) {
        grid.alpha_values.push_back(alpha);
    }
    if (sweep_trend_alpha) {
        grid.alpha_t_values = {2, 3, 4, 5, 6};
    } else {
        grid.alpha_t_values = {5};
    }
    return grid;
}

double classify_1nn(const std::vector<TimeSeries>& train, const std::vector<TimeSeries>& test,
                    Method method, const EncodeParams& params, unsigned workers) {
    check_classification_inputs(train, test);
    if (test.empty()) {
        throw EmptyDataset("classification needs a nonempty test set");
    }
    const Tables tables = make_tables(method, params);
    const EncodedSet train_enc = encode_set(train, method, params, tables.bt, tables.at);
    const EncodedSet test_enc = encode_set(test, method, params, tables.bt, tables.at);
    const std::size_t errors =
        count_errors(train_enc, test_enc, method, false, tables.bt, tables.at, workers);
    return static_cast<double>(errors) / static_cast<double>(test.size());
}

namespace {

template <typename Score>
GridResult best_grid_point(Method method, const GridSpec& grid, Score&& score,
                           std::vector<GridPointResult>* all_points, std::size_t n) {
    if (method == Method::kEuclid) {
        GridResult result;
        result.params = EncodeParams{0, 0, 0};
        result.fpr = score(result.params);
        if (all_points != nullptr) {
            all_points->push_back({result.params, result.fpr, reduction_ratio(method, 0, n)});
        }
        return result;
    }
    if (grid.w_values.empty() || grid.alpha_values.empty() || grid.alpha_t_values.empty()) {
        throw Error("empty parameter grid");
    }
    GridResult best;
    best.fpr = std::numeric_limits<double>::infinity();
    // Ascending scan order doubles as the tie-break: smaller w, then alpha,
    // then alpha_t wins at equal error.
    for (std::size_t w : grid.w_values) {
        for (int alpha : grid.alpha_values) {
            for (int alpha_t : grid.alpha_t_values) {
                const EncodeParams params{w, alpha, alpha_t};
                const double fpr = score(params);
                if (all_points != nullptr) {
                    all_points->push_back({params, fpr, reduction_ratio(method, w, n)});
                }
                if (fpr < best.fpr) {
                    best.fpr = fpr;
                    best.params = params;
                }
            }
        }
    }
    return best;
}

} // namespace

GridResult grid_search(const std::vector<TimeSeries>& train,
                       const std::vector<TimeSeries>& test, Method method, const GridSpec& grid,
                       unsigned workers, std::vector<GridPointResult>* all_points) {
    check_classification_inputs(train, test);
    const std::size_t n = train.front().size();
    return best_grid_point(
        method, grid,
        [&](const EncodeParams& params) {
            return classify_1nn(train, test, method, params, workers);
        },
        all_points, n);
}

GridResult grid_search_loo(const std::vector<TimeSeries>& train, Method method,
                           const GridSpec& grid, unsigned workers) {
    if (train.size() < 2) {
        throw EmptyDataset("leave-one-out selection needs at least 2 training series");
    }
    check_classification_inputs(train, train);
    const std::size_t n = train.front().size();
    return best_grid_point(
        method, grid,
        [&](const EncodeParams& params) {
            const Tables tables = make_tables(method, params);
            const EncodedSet enc = encode_set(train, method, params, tables.bt, tables.at);
            const std::size_t errors =
                count_errors(enc, enc, method, true, tables.bt, tables.at, workers);
            return static_cast<double>(errors) / static_cast<double>(train.size());
        },
        nullptr, n);
}

double reduction_ratio(Method method, std::size_t w, std::size_t n) {
    const double wd = static_cast<double>(w);
    const double nd = static_cast<double>(n);
    switch (method) {
    case Method::kEuclid: return 1.0;
    case Method::kSax: return wd / nd;
    case Method::kEsax: return 3.0 * wd / nd;
    case Method::kSaxTd: return (2.0 * wd + 1.0) / nd;
    case Method::kTfsax: return 2.0 * wd / nd;
    }
    throw Error("unknown method");
}

std::vector<BenchRow> bench_runtime(const Dataset& dataset, Method method,
                                    const std::vector<std::size_t>& w_values, int alpha,
                                    int alpha_t, int repeats) {
    using Clock = std::chrono::steady_clock;
    check_classification_inputs(dataset.train, dataset.test);
    std::vector<BenchRow> rows;
    rows.reserve(w_values.size());
    for (std::size_t w : w_values) {
        const EncodeParams params{w, alpha, alpha_t};
        const Tables tables = make_tables(method, params);
        BenchRow row;
        row.w = w;

        EncodedSet train_enc;
        EncodedSet test_enc;
        const auto t0 = Clock::now();
        for (int r = 0; r < repeats; ++r) {
            train_enc = encode_set(dataset.train, method, params, tables.bt, tables.at);
            test_enc = encode_set(dataset.test, method, params, tables.bt, tables.at);
        }
        const auto t1 = Clock::now();
        std::size_t errors = 0;
        for (int r = 0; r < repeats; ++r) {
            errors = count_errors(train_enc, test_enc, method, false, tables.bt, tables.at, 1);
        }
        const auto t2 = Clock::now();
        (void)errors;
        row.transform_seconds = std::chrono::duration<double>(t1 - t0).count();
        row.classify_seconds = std::chrono::duration<double>(t2 - t1).count();
        rows.push_back(row);
    }
    return rows;
}

void emit_report(const EvalReport& report, const std::string& out_dir) {
    if (report.classification.empty() && report.tlb.empty() && report.runtime.empty()) {
        throw Error("emit_report: nothing to write");
    }
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory: " + out_dir);
    }
    const auto open = [&](const std::string& name) {
        std::ofstream out(out_dir + "/" + name, std::ios::binary);
        if (!out) {
            throw IoError("cannot write file: " + out_dir + "/" + name);
        }
        return out;
    };

    if (!report.classification.empty()) {
        std::ofstream summary = open("summary.csv");
        summary << "dataset,method,w,alpha,alpha_t,ratio,fpr\n";
        std::ofstream ratio = open("ratio.csv");
        ratio << "dataset,method,ratio\n";
        for (const DatasetReport& ds : report.classification) {
            for (const MethodResult& m : ds.methods) {
                summary << ds.name << ',' << method_name(m.method) << ',';
                if (m.method == Method::kEuclid) {
                    summary << ",,";
                } else {
                    summary << m.params.w << ',' << m.params.alpha << ',';
                    if (m.method == Method::kTfsax) {
                        summary << m.params.alpha_t;
                    }
                }
                summary << ',' << format_double(m.ratio) << ',' << format_double(m.fpr)
                        << '\n';
                ratio << ds.name << ',' << method_name(m.method) << ','
                      << format_double(m.ratio) << '\n';
            }
        }
        if (!summary || !ratio) {
            throw IoError("write failed under " + out_dir);
        }
    }
    if (!report.tlb.empty()) {
        write_audit_summary_csv(out_dir + "/tlb.csv", report.tlb);
    }
    if (!report.runtime.empty()) {
        std::ofstream runtime = open("runtime.csv");
        runtime << "dataset,method,w,alpha,transform_seconds,classify_seconds,total_seconds\n";
        for (const RuntimeRow& r : report.runtime) {
            runtime << r.dataset << ',' << method_name(r.method) << ',' << r.w << ','
                    << r.alpha << ',' << format_double(r.transform_seconds) << ','
                    << format_double(r.classify_seconds) << ','
                    << format_double(r.transform_seconds + r.classify_seconds) << '\n';
        }
        if (!runtime) {
            throw IoError("write failed under " + out_dir);
        }
    }
}

} // namespace tfsax
