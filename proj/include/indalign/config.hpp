#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "indalign/corpus.hpp"
#include "indalign/gateway.hpp"
#include "indalign/stats.hpp"
#include "indalign/tree.hpp"

namespace indalign {

// Minimal TOML subset: [sections], key = "string" | number | true/false |
// ["array", "of", "strings"], # comments. Enough for run configs; anything
// fancier is rejected with a ConfigError naming the line.
class TomlTable {
  public:
    using Value = std::variant<std::string, double, bool, std::vector<std::string>>;

    static TomlTable parse_file(const std::filesystem::path& path);
    static TomlTable parse(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& dotted_key) const;
    std::string get_string(const std::string& dotted_key, const std::string& fallback) const;
    double get_number(const std::string& dotted_key, double fallback) const;
    bool get_bool(const std::string& dotted_key, bool fallback) const;
    std::vector<std::string> get_strings(const std::string& dotted_key,
                                         std::vector<std::string> fallback) const;

  private:
    std::map<std::string, Value> values_;  // "section.key" -> value
};

enum class ReportFormat { Markdown, Csv, Json };

struct RunConfig {
    // [paths]
    std::filesystem::path submissions;
    std::filesystem::path ratings;
    std::filesystem::path criteria;  // empty -> default criteria
    std::filesystem::path catalog;   // empty -> default catalog
    std::filesystem::path cache_dir = "cache";
    std::filesystem::path output_dir = "out";

    // [corpus]
    SubmissionFormat submissions_format = SubmissionFormat::JsonLines;
    RatingScale scale;

    GatewayConfig gateway;    // [gateway]
    Thresholds thresholds;    // [thresholds]
    FitParams fit;            // [model]
    ModelKind model_kind = ModelKind::Forest;

    std::vector<ReportFormat> report_formats = {ReportFormat::Markdown, ReportFormat::Csv,
                                                ReportFormat::Json};

    // Derived output locations.
    std::filesystem::path matrix_csv() const { return output_dir / "indicator_matrix.csv"; }
    std::filesystem::path audit_log() const { return output_dir / "extraction_audit.jsonl"; }
    std::filesystem::path alignment_csv() const { return output_dir / "alignment.csv"; }
    std::filesystem::path report_md() const { return output_dir / "alignment_report.md"; }
    std::filesystem::path summary_json() const { return output_dir / "alignment_summary.json"; }
    std::filesystem::path models_json() const { return output_dir / "models.json"; }
    std::filesystem::path predictions_json() const { return output_dir / "predictions.json"; }
};

// Loads the config file; the INDALIGN_API_KEY environment variable overrides
// any api_key from the file. Relative paths resolve against the config's
// directory. Throws ConfigError.
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace indalign
