#include "tfsax/audit.hpp"

#include "tfsax/errors.hpp"
#include "tfsax/format.hpp"
#include "tfsax/parallel.hpp"
#include "tfsax/random.hpp"
#include "tfsax/tfsax.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

namespace tfsax {

namespace {

std::vector<std::size_t> pick_pairs(std::size_t total, std::size_t samples, std::uint64_t seed) {
    std::vector<std::size_t> pairs;
    if (total <= samples) {
        pairs.resize(total);
        for (std::size_t i = 0; i < total; ++i) {
            pairs[i] = i;
        }
        return pairs;
    }
    Rng rng(seed);
    std::unordered_set<std::size_t> chosen;
    chosen.reserve(samples * 2);
    while (chosen.size() < samples) {
        chosen.insert(static_cast<std::size_t>(rng.next_range(0, total - 1)));
    }
    pairs.assign(chosen.begin(), chosen.end());
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace

AuditResult audit_lower_bound(const Dataset& dataset, const AuditGrid& grid,
                              std::size_t samples, std::uint64_t seed, unsigned workers) {
    if (dataset.train.empty() || dataset.test.empty()) {
        throw EmptyDataset("audit needs a nonempty train/test split");
    }
    if (grid.w_values.empty() || grid.alpha_values.empty()) {
        throw Error("audit grid is empty");
    }

    AuditResult result;
    const std::size_t train_count = dataset.train.size();
    const std::size_t total = train_count * dataset.test.size();
    std::vector<std::size_t> pair_ids = pick_pairs(total, samples == 0 ? total : samples, seed);

    // Euclidean distances are shared by every grid point; pairs at distance
    // zero have no defined TLB and are dropped once, up front.
    std::vector<double> euclid_by_pair(pair_ids.size());
    parallel_for(pair_ids.size(), workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const std::size_t ti = pair_ids[k] / train_count;
            const std::size_t si = pair_ids[k] % train_count;
            euclid_by_pair[k] = euclidean(dataset.test[ti], dataset.train[si]);
        }
    });
    std::vector<std::size_t> kept;
    kept.reserve(pair_ids.size());
    for (std::size_t k = 0; k < pair_ids.size(); ++k) {
        if (euclid_by_pair[k] > 0.0) {
            kept.push_back(k);
        }
    }
    result.excluded_pairs = pair_ids.size() - kept.size();
    if (result.excluded_pairs > 0) {
        result.warnings.push_back(std::to_string(result.excluded_pairs) +
                                  " pair(s) at Euclidean distance 0 excluded");
    }
    if (kept.empty()) {
        result.warnings.push_back("no auditable pairs: every sampled pair is identical");
        return result;
    }

    const AngleBreakpointTable at = angle_breakpoints(grid.alpha_t);
    for (std::size_t w : grid.w_values) {
        for (int alpha : grid.alpha_values) {
            const BreakpointTable bt = gaussian_breakpoints(alpha);
            std::vector<TfsaxWord> train_words(train_count);
            std::vector<TfsaxWord> test_words(dataset.test.size());
            parallel_for(train_count, workers, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                    train_words[i] = tfsax_encode(dataset.train[i], w, bt, at);
                }
            });
            parallel_for(dataset.test.size(), workers, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                    test_words[i] = tfsax_encode(dataset.test[i], w, bt, at);
                }
            });

            std::vector<BoundAuditRecord> point_records(kept.size());
            parallel_for(kept.size(), workers, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t r = lo; r < hi; ++r) {
                    const std::size_t k = kept[r];
                    const std::size_t ti = pair_ids[k] / train_count;
                    const std::size_t si = pair_ids[k] % train_count;
                    BoundAuditRecord rec;
                    rec.pair_id = pair_ids[k];
                    rec.w = w;
                    rec.alpha = alpha;
                    rec.alpha_t = grid.alpha_t;
                    rec.euclid = euclid_by_pair[k];
                    rec.mindist_val =
                        mindist(test_words[ti].sax, train_words[si].sax, bt);
                    rec.tdist_val = tdist(test_words[ti], train_words[si], bt, at);
                    rec.tlb_mindist = rec.mindist_val / rec.euclid;
                    rec.tlb_tdist = rec.tdist_val / rec.euclid;
                    point_records[r] = rec;
                }
            });

            AuditSummaryRow row;
            row.dataset = dataset.name;
            row.w = w;
            row.alpha = alpha;
            row.alpha_t = grid.alpha_t;
            row.pairs = point_records.size();
            double sum_m = 0.0;
            double sum_t = 0.0;
            for (const BoundAuditRecord& rec : point_records) {
                sum_m += rec.tlb_mindist;
                sum_t += rec.tlb_tdist;
                if (rec.mindist_val > rec.euclid) {
                    ++row.mindist_violations;
                }
                if (rec.tdist_val > rec.euclid) {
                    ++row.tdist_violations;
                }
            }
            row.mean_tlb_mindist = sum_m / static_cast<double>(point_records.size());
            row.mean_tlb_tdist = sum_t / static_cast<double>(point_records.size());
            result.summary.push_back(row);
            result.records.insert(result.records.end(), point_records.begin(),
                                  point_records.end());
        }
    }
    return result;
}

void write_audit_detail_csv(const std::string& path, const std::string& dataset_name,
                            const std::vector<BoundAuditRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write file: " + path);
    }
    out << "dataset,w,alpha,alpha_t,pair_id,euclid,mindist,tdist,tlb_mindist,tlb_tdist\n";
    for (const BoundAuditRecord& r : records) {
        out << dataset_name << ',' << r.w << ',' << r.alpha << ',' << r.alpha_t << ','
            << r.pair_id << ',' << format_double(r.euclid) << ','
            << format_double(r.mindist_val) << ',' << format_double(r.tdist_val) << ','
            << format_double(r.tlb_mindist) << ',' << format_double(r.tlb_tdist) << '\n';
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

void write_audit_summary_csv(const std::string& path, const std::vector<AuditSummaryRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write file: " + path);
    }
    out << "dataset,w,alpha,alpha_t,pairs,mean_tlb_mindist,mean_tlb_tdist,"
           "mindist_violations,tdist_violations\n";
    for (const AuditSummaryRow& r : rows) {
        out << r.dataset << ',' << r.w << ',' << r.alpha << ',' << r.alpha_t << ',' << r.pairs
            << ',' << format_double(r.mean_tlb_mindist) << ','
            << format_double(r.mean_tlb_tdist) << ',' << r.mindist_violations << ','
            << r.tdist_violations << '\n';
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

} // namespace tfsax
