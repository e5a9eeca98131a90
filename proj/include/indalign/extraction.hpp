#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "indalign/catalog.hpp"
#include "indalign/corpus.hpp"
#include "indalign/gateway.hpp"
#include "indalign/matrix.hpp"

namespace indalign {

enum class CellStatus { Ok, Unparseable, TransportFailed };

std::string_view status_name(CellStatus status);
CellStatus status_from_name(std::string_view name);

// One (submission, indicator) extraction outcome. value present iff Ok.
struct IndicatorCell {
    std::string submission_id;
    std::string indicator_id;
    std::optional<double> value;
    CellStatus status = CellStatus::TransportFailed;
    std::string raw_response;
    std::string prompt_hash;
    int attempt = 0;  // parse attempts consumed (an unparseable reply triggers one re-query)
    bool from_cache = false;
};

// Complete submissions x indicators grid, rows in corpus order and columns
// in catalog order regardless of request completion order.
class IndicatorMatrix {
  public:
    IndicatorMatrix() = default;
    IndicatorMatrix(std::vector<std::string> submission_ids, std::vector<std::string> indicator_ids);

    Eigen::Index rows() const { return static_cast<Eigen::Index>(submission_ids_.size()); }
    Eigen::Index cols() const { return static_cast<Eigen::Index>(indicator_ids_.size()); }

    const std::vector<std::string>& submission_ids() const { return submission_ids_; }
    const std::vector<std::string>& indicator_ids() const { return indicator_ids_; }

    IndicatorCell& cell(Eigen::Index row, Eigen::Index col);
    const IndicatorCell& cell(Eigen::Index row, Eigen::Index col) const;

    // Indicator column in submission order, NaN where the cell failed.
    Eigen::VectorXd column(const std::string& indicator_id) const;

    ValueMatrix values() const;
    int count(CellStatus status) const;

  private:
    std::vector<std::string> submission_ids_;
    std::vector<std::string> indicator_ids_;
    std::vector<IndicatorCell> cells_;  // row-major
};

// Directory of per-cell files keyed by model name + prompt hash. Ok and
// Unparseable outcomes are cached; TransportFailed is transient and is not.
class CacheStore {
  public:
    explicit CacheStore(std::filesystem::path dir);

    std::optional<IndicatorCell> lookup(const std::string& model_name,
                                        const std::string& prompt_hash) const;
    void store(const std::string& model_name, const IndicatorCell& cell) const;

    static std::string key_for(const std::string& model_name, const std::string& prompt_hash);
    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
};

struct ExtractionOptions {
    std::filesystem::path audit_log;  // empty -> no audit log
    int workers = 0;                  // 0 -> min(gateway limit, cell count)
};

struct ExtractionStats {
    std::int64_t gateway_calls = 0;
    std::int64_t cache_hits = 0;
    int ok = 0;
    int unparseable = 0;
    int transport_failed = 0;
};

// Runs the full catalog x corpus grid through the gateway. Failures stay
// per-cell; AbortError is thrown only when every fresh cell transport-failed
// (gateway unreachable). The audit log gets one JSON line per cell, in grid order.
IndicatorMatrix extract_all(const Corpus& corpus, const Catalog& catalog, Gateway& gateway,
                            const CacheStore& cache, const ExtractionOptions& options = {},
                            ExtractionStats* stats = nullptr);

}  // namespace indalign
