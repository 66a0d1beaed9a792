#pragma once

#include "tfsax/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tfsax {

/// One audited pair at one grid point. tdist_val >= mindist_val always holds;
/// whether either exceeds euclid is what the audit measures.
struct BoundAuditRecord {
    std::size_t pair_id = 0; // test_index * train_count + train_index
    std::size_t w = 0;
    int alpha = 0;
    int alpha_t = 0;
    double euclid = 0.0;
    double mindist_val = 0.0;
    double tdist_val = 0.0;
    double tlb_mindist = 0.0;
    double tlb_tdist = 0.0;
};

struct AuditSummaryRow {
    std::string dataset;
    std::size_t w = 0;
    int alpha = 0;
    int alpha_t = 0;
    std::size_t pairs = 0;
    double mean_tlb_mindist = 0.0;
    double mean_tlb_tdist = 0.0;
    std::size_t mindist_violations = 0; // mindist > euclid
    std::size_t tdist_violations = 0;   // tdist > euclid
};

struct AuditGrid {
    std::vector<std::size_t> w_values;
    std::vector<int> alpha_values;
    int alpha_t = 5;
};

struct AuditResult {
    std::vector<BoundAuditRecord> records; // grouped by grid point, then pair
    std::vector<AuditSummaryRow> summary;
    std::size_t excluded_pairs = 0; // pairs at Euclidean distance zero
    std::vector<std::string> warnings;
};

/// Audits the lower-bound claims over test x train pairs of a (normalized)
/// dataset. All pairs are used when their number is at most `samples`,
/// otherwise a seeded uniform sample of that size. Results are identical for
/// any worker count.
AuditResult audit_lower_bound(const Dataset& dataset, const AuditGrid& grid,
                              std::size_t samples, std::uint64_t seed, unsigned workers = 1);

void write_audit_detail_csv(const std::string& path, const std::string& dataset_name,
                            const std::vector<BoundAuditRecord>& records);

void write_audit_summary_csv(const std::string& path, const std::vector<AuditSummaryRow>& rows);

} // namespace tfsax
