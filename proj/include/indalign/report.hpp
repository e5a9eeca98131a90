#pragma once

#include <string>

#include <json.hpp>

#include "indalign/catalog.hpp"
#include "indalign/stats.hpp"

namespace indalign {

// Visual emphasis of one report cell. Tier styles imply significance;
// sub-interest cells stay dimmed even when significant.
enum class CellEmphasis { None, Significant, HighTier, VeryHighTier, Dimmed };

CellEmphasis cell_style(const CorrelationCell& cell, const Thresholds& thresholds);

// Markdown cell text: pcc to two decimals, "*" at the high tier, "**" at the
// very-high tier, bold when p <= alpha, parentheses for dimmed, blank when
// undefined.
std::string format_pcc_cell(const CorrelationCell& cell, const Thresholds& thresholds);

// "44/63 (70%)" -- retention in the reporting shape used everywhere.
std::string format_retention(int retained, int total);
// "20%"
std::string format_share(int hits, int total);

// Indicator-by-criterion table (catalog row order, criterion ordinal column
// order) with a legend and the summary block.
std::string render_markdown_report(const AlignmentMatrix& alignment, const Catalog& catalog,
                                   const std::vector<CriterionId>& criteria,
                                   const Thresholds& thresholds, const AlignmentSummary& summary);

std::string render_summary_text(const AlignmentSummary& summary);
nlohmann::json summary_to_json(const AlignmentSummary& summary);

}  // namespace indalign
