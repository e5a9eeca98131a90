#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "indalign/catalog.hpp"
#include "indalign/matrix.hpp"

namespace indalign {

// Pearson r and two-tailed p for one indicator/criterion pair.
// n is the pairwise-complete sample size. pcc is defined only when n >= 3
// and both columns have nonzero variance; p is defined iff pcc is.
struct CorrelationCell {
    std::optional<double> pcc;
    std::optional<double> p;
    int n = 0;

    bool defined() const { return pcc.has_value(); }
};

struct Thresholds {
    double interest = 0.5;
    double high = 0.70;
    double very_high = 0.8;
    double alpha = 0.01;

    void validate() const;  // 0 < interest <= high <= very_high <= 1, 0 < alpha < 1
};

// Retention levels. Interest is threshold-only; High and VeryHigh require
// significance at alpha as well.
enum class Tier { None, Interest, High, VeryHigh };
std::string_view tier_name(Tier tier);
Tier tier_from_name(std::string_view name);

struct AlignmentMatrix {
    std::vector<std::string> indicator_ids;
    std::vector<std::string> criterion_ids;
    std::vector<CorrelationCell> cells;  // row-major, indicators x criteria

    const CorrelationCell& cell(Eigen::Index indicator, Eigen::Index criterion) const;
    CorrelationCell& cell(Eigen::Index indicator, Eigen::Index criterion);
    Eigen::Index rows() const { return static_cast<Eigen::Index>(indicator_ids.size()); }
    Eigen::Index cols() const { return static_cast<Eigen::Index>(criterion_ids.size()); }
};

// I_x(a, b), continued-fraction evaluation, relative error <= 1e-10.
double regularized_incomplete_beta(double a, double b, double x);

// Pairwise-complete Pearson correlation; NaN entries drop the pair.
// Undefined (nullopt) when fewer than 3 complete pairs remain or either
// side has zero variance. Throws LengthMismatch.
std::optional<double> pearson(const Eigen::Ref<const Eigen::VectorXd>& x,
                              const Eigen::Ref<const Eigen::VectorXd>& y);

// Student-t two-tailed p for r at sample size n:
//   t = r * sqrt((n-2) / (1-r^2)),  p = 2 * (1 - F_t(|t|; n-2))
// computed via the regularized incomplete beta. |r| = 1 gives exactly 0,
// r = 0 exactly 1. Throws InsufficientSamples for n < 3.
double p_value_two_tailed(double r, int n);

CorrelationCell correlate(const Eigen::Ref<const Eigen::VectorXd>& x,
                          const Eigen::Ref<const Eigen::VectorXd>& y);

// Full indicator x criterion grid. Rows of `indicators` are matched to rows
// of `ratings` by id (set equality required, order reconciled); throws
// RowMismatch when the row sets differ.
AlignmentMatrix align(const ValueMatrix& indicators, const ValueMatrix& ratings);

// Tier a single cell reaches on its own.
Tier cell_tier(const CorrelationCell& cell, const Thresholds& thresholds);

struct BestCell {
    std::string criterion_id;
    CorrelationCell cell;
};

struct RetainedIndicator {
    std::string indicator_id;
    Tier tier = Tier::None;
    std::vector<BestCell> best_cells;  // cells attaining max |pcc| (usually one)
};

// Keeps indicators whose best |pcc| clears the interest threshold; tier is
// the max over the row's cells (|pcc| on an absolute-value basis, High and
// VeryHigh additionally require p <= alpha). Output preserves row order.
std::vector<RetainedIndicator> filter_indicators(const AlignmentMatrix& alignment,
                                                 const Thresholds& thresholds);

struct AlignmentSummary {
    int total_indicators = 0;
    int retained_interest = 0;  // tier >= Interest
    int retained_high = 0;      // tier >= High
    int retained_very_high = 0;
    double share_interest = 0.0;
    double share_high = 0.0;
    double share_very_high = 0.0;

    int binary_total = 0;
    int binary_interest = 0;
    int binary_high = 0;
    int list_total = 0;
    int list_interest = 0;
    int list_high = 0;

    // Per-cell counts: |pcc| >= high (resp. very_high) with p <= alpha.
    int relevant_cells_high = 0;
    int relevant_cells_very_high = 0;

    // Median over indicators having >= 1 high-significant cell / over all criteria.
    double median_criteria_per_high_indicator = 0.0;
    double median_indicators_per_criterion = 0.0;

    int intended_total = 0;  // retained indicators declaring an intended criterion
    int intended_hits = 0;   // ... whose best cell lies on it
    double intended_hit_share = 0.0;
};

AlignmentSummary summarize(const AlignmentMatrix& alignment, const Catalog& catalog,
                           const Thresholds& thresholds);

// CSV columns: indicator_id, criterion_id, pcc, p, n, tier. Undefined cells
// render as blanks; numbers round-trip exactly.
void write_alignment_csv(const AlignmentMatrix& alignment, const Thresholds& thresholds,
                         const std::filesystem::path& path);
AlignmentMatrix read_alignment_csv(const std::filesystem::path& path);

}  // namespace indalign
