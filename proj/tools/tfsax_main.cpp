// Command-line surface: encode, dist, classify, audit, gen, bench, report.
// stdout carries data, stderr carries diagnostics. Exit codes: 0 success,
// 1 domain error, 2 usage or I/O error.

#include "tfsax/audit.hpp"
#include "tfsax/baselines.hpp"
#include "tfsax/dataset.hpp"
#include "tfsax/errors.hpp"
#include "tfsax/eval.hpp"
#include "tfsax/format.hpp"
#include "tfsax/sweep.hpp"
#include "tfsax/tfsax.hpp"
#include "tfsax/words.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace tfsax;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Method parse_method(const std::string& name) {
    const auto m = method_from_string(name);
    if (!m) {
        throw UsageError("unknown method '" + name + "'");
    }
    return *m;
}

std::string data_dir_default(const std::string& flag_value) {
    if (!flag_value.empty()) {
        return flag_value;
    }
    if (const char* env = std::getenv("TFSAX_DATA_DIR")) {
        return env;
    }
    return "data";
}

std::vector<TimeSeries> normalize_all(std::vector<TimeSeries> series, const LoadOptions& opts) {
    if (!opts.normalize) {
        return series;
    }
    for (auto& s : series) {
        s = znormalize(s, opts.zeros_on_constant);
    }
    return series;
}

/// Loads --train/--test files, or resolves --dataset against the data dir;
/// "cbf" falls back to the seeded generator when no files exist.
Dataset resolve_dataset(const std::string& train_path, const std::string& test_path,
                        const std::string& name, const std::string& data_dir,
                        std::uint64_t seed, const LoadOptions& opts) {
    if (!train_path.empty() || !test_path.empty()) {
        if (train_path.empty() || test_path.empty()) {
            throw UsageError("--train and --test must be given together");
        }
        return load_ucr(train_path, test_path, name, opts);
    }
    if (name.empty()) {
        throw UsageError("give either --train/--test or --dataset");
    }
    const std::string root = data_dir_default(data_dir);
    if (const auto pair = find_ucr_pair(root, name)) {
        return load_ucr(pair->first, pair->second, name, opts);
    }
    if (name == "cbf") {
        std::cerr << "note: no cbf files under '" << root << "', generating (seed " << seed
                  << ")\n";
        Dataset ds = gen_cbf(10, 300, 128, seed);
        ds.train = normalize_all(std::move(ds.train), opts);
        ds.test = normalize_all(std::move(ds.test), opts);
        return ds;
    }
    throw IoError("dataset '" + name + "' not found under '" + root + "'");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) {
        return std::cout;
    }
    file.open(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot write file: " + path);
    }
    return file;
}

// ---- encode ----------------------------------------------------------------

struct EncodeArgs {
    std::string method = "tfsax";
    std::string input;
    std::string output;
    std::size_t w = 8;
    int alpha = 5;
    int alpha_t = 5;
    bool no_normalize = false;
    bool zeros_on_constant = false;
};

int run_encode(const EncodeArgs& args) {
    const Method method = parse_method(args.method);
    if (method == Method::kEuclid) {
        throw UsageError("encode needs a symbolic method (sax, esax, saxtd, tfsax)");
    }
    LoadOptions opts;
    opts.normalize = !args.no_normalize;
    opts.zeros_on_constant = args.zeros_on_constant;
    const std::vector<TimeSeries> series = load_ucr_file(args.input, opts);
    const std::size_t n = series.front().size();
    const BreakpointTable bt = gaussian_breakpoints(args.alpha);
    const AngleBreakpointTable at =
        method == Method::kTfsax ? angle_breakpoints(args.alpha_t) : AngleBreakpointTable{};

    std::ofstream file;
    std::ostream& out = open_output(file, args.output);
    out << "# tfsax-words v1 method=" << method_name(method) << " n=" << n
        << " w=" << args.w << " alpha=" << args.alpha;
    if (method == Method::kTfsax) {
        out << " alpha_t=" << args.alpha_t;
    }
    out << " count=" << series.size() << '\n';
    for (const TimeSeries& s : series) {
        switch (method) {
        case Method::kSax: out << render(sax_encode(s, args.w, bt)); break;
        case Method::kEsax: out << render(esax_encode(s, args.w, bt)); break;
        case Method::kSaxTd: out << render(saxtd_encode(s, args.w, bt)); break;
        default: out << render(tfsax_encode(s, args.w, bt, at)); break;
        }
        out << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError("write failed");
    }
    return 0;
}

// ---- dist ------------------------------------------------------------------

struct DistArgs {
    std::string method = "tfsax";
    std::string input;
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t w = 8;
    int alpha = 5;
    int alpha_t = 5;
    bool no_normalize = false;
    bool zeros_on_constant = false;
};

int run_dist(const DistArgs& args) {
    const Method method = parse_method(args.method);
    LoadOptions opts;
    opts.normalize = !args.no_normalize;
    opts.zeros_on_constant = args.zeros_on_constant;
    const std::vector<TimeSeries> series = load_ucr_file(args.input, opts);
    if (args.i >= series.size() || args.j >= series.size()) {
        throw UsageError("series indices out of range (file has " +
                         std::to_string(series.size()) + " rows)");
    }
    const TimeSeries& a = series[args.i];
    const TimeSeries& b = series[args.j];

    double value = 0.0;
    if (method == Method::kEuclid) {
        value = euclidean(a, b);
    } else {
        const BreakpointTable bt = gaussian_breakpoints(args.alpha);
        switch (method) {
        case Method::kSax:
            value = mindist(sax_encode(a, args.w, bt), sax_encode(b, args.w, bt), bt);
            break;
        case Method::kEsax:
            value = esax_dist(esax_encode(a, args.w, bt), esax_encode(b, args.w, bt), bt);
            break;
        case Method::kSaxTd:
            value = saxtd_dist(saxtd_encode(a, args.w, bt), saxtd_encode(b, args.w, bt), bt);
            break;
        default: {
            const AngleBreakpointTable at = angle_breakpoints(args.alpha_t);
            value = tdist(tfsax_encode(a, args.w, bt, at), tfsax_encode(b, args.w, bt, at),
                          bt, at);
            break;
        }
        }
    }
    std::cout << format_double(value) << '\n';
    return 0;
}

// ---- classify ----------------------------------------------------------------

struct ClassifyArgs {
    std::string method = "tfsax";
    std::string train_path;
    std::string test_path;
    std::string dataset;
    std::string data_dir;
    std::string grid_csv;
    bool grid = false;
    std::size_t w = 0;
    int alpha = 5;
    int alpha_t = 5;
    bool sweep_trend_alpha = false;
    bool honest_selection = false;
    unsigned workers = 1;
    std::uint64_t seed = 7;
    bool no_normalize = false;
    bool zeros_on_constant = false;
};

int run_classify(const ClassifyArgs& args) {
    const Method method = parse_method(args.method);
    if (args.grid && args.w != 0) {
        throw UsageError("--grid conflicts with --w");
    }
    if (method != Method::kEuclid && !args.grid && args.w == 0) {
        throw UsageError("give --grid or a fixed --w");
    }
    LoadOptions opts;
    opts.normalize = !args.no_normalize;
    opts.zeros_on_constant = args.zeros_on_constant;
    const Dataset ds = resolve_dataset(args.train_path, args.test_path, args.dataset,
                                       args.data_dir, args.seed, opts);

    EncodeParams best_params{args.w, args.alpha, args.alpha_t};
    double fpr = 0.0;
    std::vector<GridPointResult> points;
    std::vector<GridPointResult>* points_out = args.grid_csv.empty() ? nullptr : &points;

    if (method == Method::kEuclid || args.grid) {
        const GridSpec grid = GridSpec::standard(ds.length(), args.sweep_trend_alpha);
        if (args.honest_selection) {
            const GridResult chosen = grid_search_loo(ds.train, method, grid, args.workers);
            best_params = chosen.params;
            fpr = classify_1nn(ds.train, ds.test, method, best_params, args.workers);
        } else {
            const GridResult r =
                grid_search(ds.train, ds.test, method, grid, args.workers, points_out);
            best_params = r.params;
            fpr = r.fpr;
        }
    } else {
        fpr = classify_1nn(ds.train, ds.test, method, best_params, args.workers);
    }

    std::cout << "dataset,method,w,alpha,alpha_t,ratio,fpr\n";
    std::cout << ds.name << ',' << method_name(method) << ',';
    if (method == Method::kEuclid) {
        std::cout << ",,";
    } else {
        std::cout << best_params.w << ',' << best_params.alpha << ',';
        if (method == Method::kTfsax) {
            std::cout << best_params.alpha_t;
        }
    }
    std::cout << ',' << format_double(reduction_ratio(method, best_params.w, ds.length()))
              << ',' << format_double(fpr) << '\n';

    if (points_out != nullptr) {
        std::ofstream out(args.grid_csv, std::ios::binary);
        if (!out) {
            throw IoError("cannot write file: " + args.grid_csv);
        }
        out << "dataset,method,w,alpha,alpha_t,ratio,fpr\n";
        for (const auto& p : points) {
            out << ds.name << ',' << method_name(method) << ',' << p.params.w << ','
                << p.params.alpha << ',' << p.params.alpha_t << ','
                << format_double(p.ratio) << ',' << format_double(p.fpr) << '\n';
        }
    }
    return 0;
}

// ---- audit -------------------------------------------------------------------

struct AuditArgs {
    std::string train_path;
    std::string test_path;
    std::string dataset;
    std::string data_dir;
    std::string ws;
    std::string alphas;
    int alpha_t = 5;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    std::string out_detail;
    std::string out_summary;
    unsigned workers = 1;
    bool no_normalize = false;
    bool zeros_on_constant = false;
};

int run_audit(const AuditArgs& args) {
    LoadOptions opts;
    opts.normalize = !args.no_normalize;
    opts.zeros_on_constant = args.zeros_on_constant;
    const Dataset ds = resolve_dataset(args.train_path, args.test_path, args.dataset,
                                       args.data_dir, args.seed, opts);
    AuditGrid grid;
    grid.alpha_t = args.alpha_t;
    for (std::size_t w : parse_sweep(args.ws.empty() ? "32" : args.ws)) {
        grid.w_values.push_back(w);
    }
    for (std::size_t a : parse_sweep(args.alphas.empty() ? "3:10" : args.alphas)) {
        grid.alpha_values.push_back(static_cast<int>(a));
    }

    const AuditResult result =
        audit_lower_bound(ds, grid, args.samples, args.seed, args.workers);
    for (const std::string& warning : result.warnings) {
        std::cerr << "warning: " << warning << '\n';
    }
    if (!args.out_detail.empty()) {
        write_audit_detail_csv(args.out_detail, ds.name, result.records);
    }
    if (!args.out_summary.empty()) {
        write_audit_summary_csv(args.out_summary, result.summary);
    } else {
        std::cout << "dataset,w,alpha,alpha_t,pairs,mean_tlb_mindist,mean_tlb_tdist,"
                     "mindist_violations,tdist_violations\n";
        for (const auto& row : result.summary) {
            std::cout << row.dataset << ',' << row.w << ',' << row.alpha << ','
                      << row.alpha_t << ',' << row.pairs << ','
                      << format_double(row.mean_tlb_mindist) << ','
                      << format_double(row.mean_tlb_tdist) << ',' << row.mindist_violations
                      << ',' << row.tdist_violations << '\n';
        }
    }
    return 0;
}

// ---- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string generator = "cbf";
    std::size_t per_class = 10;
    std::size_t train_per_class = 0;
    std::size_t test_per_class = 0;
    std::size_t length = 128;
    std::uint64_t seed = 7;
    std::string out_dir = ".";
};

int run_gen(const GenArgs& args) {
    if (args.generator != "cbf") {
        throw UsageError("unknown generator '" + args.generator + "' (have: cbf)");
    }
    const std::size_t train_pc =
        args.train_per_class != 0 ? args.train_per_class : args.per_class;
    const std::size_t test_pc = args.test_per_class != 0 ? args.test_per_class : args.per_class;
    const Dataset ds = gen_cbf(train_pc, test_pc, args.length, args.seed);
    const std::string train_path = args.out_dir + "/cbf_train.txt";
    const std::string test_path = args.out_dir + "/cbf_test.txt";
    write_ucr_file(train_path, ds.train);
    write_ucr_file(test_path, ds.test);
    std::cerr << "wrote " << train_path << " (" << ds.train.size() << " series) and "
              << test_path << " (" << ds.test.size() << " series)\n";
    return 0;
}

// ---- bench -------------------------------------------------------------------

struct BenchArgs {
    std::string train_path;
    std::string test_path;
    std::string dataset;
    std::string data_dir;
    std::string ws = "2:64:x2";
    int alpha = 10;
    int alpha_t = 5;
    std::string methods = "sax,esax,saxtd,tfsax";
    int repeats = 1;
    std::uint64_t seed = 7;
    std::string out;
    bool no_normalize = false;
    bool zeros_on_constant = false;
};

std::vector<Method> parse_method_list(const std::string& list) {
    std::vector<Method> methods;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string::npos) {
            comma = list.size();
        }
        if (comma > start) {
            methods.push_back(parse_method(list.substr(start, comma - start)));
        }
        start = comma + 1;
    }
    if (methods.empty()) {
        throw UsageError("empty --methods list");
    }
    return methods;
}

int run_bench(const BenchArgs& args) {
    LoadOptions opts;
    opts.normalize = !args.no_normalize;
    opts.zeros_on_constant = args.zeros_on_constant;
    const Dataset ds = resolve_dataset(args.train_path, args.test_path, args.dataset,
                                       args.data_dir, args.seed, opts);
    std::vector<std::size_t> ws;
    for (std::size_t w : parse_sweep(args.ws)) {
        if (w <= ds.length() / 2) {
            ws.push_back(w);
        }
    }
    std::ofstream file;
    std::ostream& out = open_output(file, args.out);
    out << "dataset,method,w,alpha,transform_seconds,classify_seconds,total_seconds\n";
    for (Method method : parse_method_list(args.methods)) {
        const auto rows = bench_runtime(ds, method, ws, args.alpha, args.alpha_t, args.repeats);
        for (const BenchRow& r : rows) {
            out << ds.name << ',' << method_name(method) << ',' << r.w << ',' << args.alpha
                << ',' << format_double(r.transform_seconds) << ','
                << format_double(r.classify_seconds) << ','
                << format_double(r.total_seconds()) << '\n';
        }
    }
    out.flush();
    return 0;
}

// ---- report ------------------------------------------------------------------

struct ReportArgs {
    std::vector<std::string> datasets;
    std::string data_dir;
    std::string methods = "sax,esax,saxtd,tfsax";
    std::string out_dir = "reports";
    unsigned workers = 1;
    std::uint64_t seed = 7;
    bool with_tlb = false;
    bool with_bench = false;
    int bench_repeats = 1;
    bool honest_selection = false;
    bool sweep_trend_alpha = false;
    bool no_normalize = false;
    bool zeros_on_constant = false;
};

int run_report(const ReportArgs& args) {
    if (args.datasets.empty()) {
        throw UsageError("give at least one --dataset");
    }
    LoadOptions opts;
    opts.normalize = !args.no_normalize;
    opts.zeros_on_constant = args.zeros_on_constant;
    const std::vector<Method> methods = parse_method_list(args.methods);

    EvalReport report;
    for (const std::string& name : args.datasets) {
        const Dataset ds = resolve_dataset("", "", name, args.data_dir, args.seed, opts);
        DatasetReport ds_report;
        ds_report.name = ds.name;
        ds_report.length = ds.length();
        const GridSpec grid = GridSpec::standard(ds.length(), args.sweep_trend_alpha);
        for (Method method : methods) {
            MethodResult mr;
            mr.method = method;
            if (args.honest_selection && method != Method::kEuclid) {
                const GridResult chosen = grid_search_loo(ds.train, method, grid, args.workers);
                mr.params = chosen.params;
                mr.fpr = classify_1nn(ds.train, ds.test, method, mr.params, args.workers);
            } else {
                const GridResult r =
                    grid_search(ds.train, ds.test, method, grid, args.workers, nullptr);
                mr.params = r.params;
                mr.fpr = r.fpr;
            }
            mr.ratio = reduction_ratio(method, mr.params.w, ds.length());
            const std::size_t bench_w = std::max<std::size_t>(mr.params.w, 1);
            const auto timed = bench_runtime(ds, method, {bench_w}, std::max(mr.params.alpha, 2),
                                             std::max(mr.params.alpha_t, 2), 1);
            mr.transform_seconds = timed.front().transform_seconds;
            mr.classify_seconds = timed.front().classify_seconds;
            report.runtime.push_back({ds.name, method, mr.params.w, mr.params.alpha,
                                      mr.transform_seconds, mr.classify_seconds});
            ds_report.methods.push_back(mr);
            std::cerr << ds.name << ' ' << method_name(method) << ": fpr "
                      << format_double(mr.fpr) << " at w=" << mr.params.w
                      << " alpha=" << mr.params.alpha << '\n';
        }
        report.classification.push_back(ds_report);

        if (args.with_tlb) {
            AuditGrid alpha_sweep;
            alpha_sweep.w_values = {std::min<std::size_t>(32, ds.length() / 2)};
            for (int a = 3; a <= 10; ++a) {
                alpha_sweep.alpha_values.push_back(a);
            }
            AuditGrid w_sweep;
            for (std::size_t w = 2; w <= std::min<std::size_t>(64, ds.length() / 2); w *= 2) {
                w_sweep.w_values.push_back(w);
            }
            w_sweep.alpha_values = {8};
            for (const AuditGrid& grid_spec : {alpha_sweep, w_sweep}) {
                const AuditResult audit =
                    audit_lower_bound(ds, grid_spec, 10000, args.seed, args.workers);
                report.tlb.insert(report.tlb.end(), audit.summary.begin(),
                                  audit.summary.end());
            }
        }
        if (args.with_bench) {
            std::vector<std::size_t> ws;
            for (std::size_t w = 2; w <= std::min<std::size_t>(64, ds.length() / 2); w *= 2) {
                ws.push_back(w);
            }
            for (Method method : methods) {
                if (method == Method::kEuclid) {
                    continue;
                }
                for (const BenchRow& row :
                     bench_runtime(ds, method, ws, 10, 5, args.bench_repeats)) {
                    report.runtime.push_back({ds.name, method, row.w, 10,
                                              row.transform_seconds, row.classify_seconds});
                }
            }
        }
    }
    emit_report(report, args.out_dir);
    std::cerr << "report written under " << args.out_dir << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"TFSAX symbolic time-series toolkit"};
    app.require_subcommand(1);

    EncodeArgs encode_args;
    CLI::App* encode = app.add_subcommand("encode", "serialize series as symbolic words");
    encode->add_option("--method", encode_args.method, "sax|esax|saxtd|tfsax");
    encode->add_option("--input", encode_args.input, "UCR-format input file")->required();
    encode->add_option("--output", encode_args.output, "write words here (default stdout)");
    encode->add_option("--w", encode_args.w, "segment count");
    encode->add_option("--alpha", encode_args.alpha, "mean alphabet size");
    encode->add_option("--alpha-t", encode_args.alpha_t, "trend alphabet size");
    encode->add_flag("--no-normalize", encode_args.no_normalize, "skip z-normalization");
    encode->add_flag("--zeros-on-constant", encode_args.zeros_on_constant,
                     "map constant series to zeros instead of failing");

    DistArgs dist_args;
    CLI::App* dist = app.add_subcommand("dist", "distance between two series of a file");
    dist->add_option("--method", dist_args.method, "euclid|sax|esax|saxtd|tfsax");
    dist->add_option("--input", dist_args.input, "UCR-format input file")->required();
    dist->add_option("--i", dist_args.i, "first row index");
    dist->add_option("--j", dist_args.j, "second row index");
    dist->add_option("--w", dist_args.w, "segment count");
    dist->add_option("--alpha", dist_args.alpha, "mean alphabet size");
    dist->add_option("--alpha-t", dist_args.alpha_t, "trend alphabet size");
    dist->add_flag("--no-normalize", dist_args.no_normalize, "skip z-normalization");
    dist->add_flag("--zeros-on-constant", dist_args.zeros_on_constant,
                   "map constant series to zeros instead of failing");

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "1-NN classification error");
    classify->add_option("--method", classify_args.method, "euclid|sax|esax|saxtd|tfsax");
    classify->add_option("--train", classify_args.train_path, "train file");
    classify->add_option("--test", classify_args.test_path, "test file");
    classify->add_option("--dataset", classify_args.dataset, "dataset name under the data dir");
    classify->add_option("--data-dir", classify_args.data_dir,
                         "dataset root (default $TFSAX_DATA_DIR or ./data)");
    classify->add_flag("--grid", classify_args.grid, "search the full (w, alpha) grid");
    classify->add_option("--w", classify_args.w, "fixed segment count");
    classify->add_option("--alpha", classify_args.alpha, "fixed mean alphabet size");
    classify->add_option("--alpha-t", classify_args.alpha_t, "trend alphabet size");
    classify->add_flag("--sweep-trend-alpha", classify_args.sweep_trend_alpha,
                       "grid over alpha_t = 2..6 as well");
    classify->add_flag("--honest-selection", classify_args.honest_selection,
                       "pick parameters by leave-one-out on the training set");
    classify->add_option("--grid-csv", classify_args.grid_csv, "write every grid point here");
    classify->add_option("--workers", classify_args.workers, "worker threads");
    classify->add_option("--seed", classify_args.seed, "seed for generated datasets");
    classify->add_flag("--no-normalize", classify_args.no_normalize, "skip z-normalization");
    classify->add_flag("--zeros-on-constant", classify_args.zeros_on_constant,
                       "map constant series to zeros instead of failing");

    AuditArgs audit_args;
    CLI::App* audit = app.add_subcommand("audit", "lower-bound audit (TLB, violations)");
    audit->add_option("--train", audit_args.train_path, "train file");
    audit->add_option("--test", audit_args.test_path, "test file");
    audit->add_option("--dataset", audit_args.dataset, "dataset name under the data dir");
    audit->add_option("--data-dir", audit_args.data_dir, "dataset root");
    audit->add_option("--w,--ws", audit_args.ws, "w sweep, e.g. 32 or 2:64:x2");
    audit->add_option("--alpha,--alphas", audit_args.alphas, "alpha sweep, e.g. 3:10");
    audit->add_option("--alpha-t", audit_args.alpha_t, "trend alphabet size");
    audit->add_option("--samples", audit_args.samples, "max audited pairs (default 10000)");
    audit->add_option("--seed", audit_args.seed, "pair-sampling seed");
    audit->add_option("--out-detail", audit_args.out_detail, "per-pair CSV path");
    audit->add_option("--out-summary", audit_args.out_summary,
                      "summary CSV path (default: stdout)");
    audit->add_option("--workers", audit_args.workers, "worker threads");
    audit->add_flag("--no-normalize", audit_args.no_normalize, "skip z-normalization");
    audit->add_flag("--zeros-on-constant", audit_args.zeros_on_constant,
                    "map constant series to zeros instead of failing");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic dataset");
    gen->add_option("generator", gen_args.generator, "generator name (cbf)");
    gen->add_option("--per-class", gen_args.per_class, "series per class for both splits");
    gen->add_option("--train-per-class", gen_args.train_per_class, "train series per class");
    gen->add_option("--test-per-class", gen_args.test_per_class, "test series per class");
    gen->add_option("--len", gen_args.length, "series length");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("--out-dir", gen_args.out_dir, "output directory");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "runtime per w at fixed alpha");
    bench->add_option("--train", bench_args.train_path, "train file");
    bench->add_option("--test", bench_args.test_path, "test file");
    bench->add_option("--dataset", bench_args.dataset, "dataset name under the data dir");
    bench->add_option("--data-dir", bench_args.data_dir, "dataset root");
    bench->add_option("--w,--ws", bench_args.ws, "w sweep (default 2:64:x2)");
    bench->add_option("--alpha", bench_args.alpha, "alphabet size (default 10)");
    bench->add_option("--alpha-t", bench_args.alpha_t, "trend alphabet size");
    bench->add_option("--methods", bench_args.methods, "comma-separated method list");
    bench->add_option("--repeats", bench_args.repeats, "repetitions per measurement");
    bench->add_option("--seed", bench_args.seed, "seed for generated datasets");
    bench->add_option("--out", bench_args.out, "CSV path (default stdout)");
    bench->add_flag("--no-normalize", bench_args.no_normalize, "skip z-normalization");
    bench->add_flag("--zeros-on-constant", bench_args.zeros_on_constant,
                    "map constant series to zeros instead of failing");

    ReportArgs report_args;
    CLI::App* report = app.add_subcommand("report", "full evaluation CSVs for datasets");
    report->add_option("--dataset", report_args.datasets, "dataset name (repeatable)");
    report->add_option("--data-dir", report_args.data_dir, "dataset root");
    report->add_option("--methods", report_args.methods, "comma-separated method list");
    report->add_option("--out-dir", report_args.out_dir, "output directory");
    report->add_option("--workers", report_args.workers, "worker threads");
    report->add_option("--seed", report_args.seed, "seed for generated datasets");
    report->add_flag("--with-tlb", report_args.with_tlb, "also run the TLB audit grids");
    report->add_flag("--with-bench", report_args.with_bench, "also measure runtimes");
    report->add_option("--bench-repeats", report_args.bench_repeats,
                       "repetitions per bench measurement");
    report->add_flag("--honest-selection", report_args.honest_selection,
                     "pick parameters by leave-one-out on the training set");
    report->add_flag("--sweep-trend-alpha", report_args.sweep_trend_alpha,
                     "grid over alpha_t = 2..6 as well");
    report->add_flag("--no-normalize", report_args.no_normalize, "skip z-normalization");
    report->add_flag("--zeros-on-constant", report_args.zeros_on_constant,
                     "map constant series to zeros instead of failing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (encode->parsed()) return run_encode(encode_args);
        if (dist->parsed()) return run_dist(dist_args);
        if (classify->parsed()) return run_classify(classify_args);
        if (audit->parsed()) return run_audit(audit_args);
        if (gen->parsed()) return run_gen(gen_args);
        if (bench->parsed()) return run_bench(bench_args);
        if (report->parsed()) return run_report(report_args);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}
