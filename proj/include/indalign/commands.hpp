#pragma once

#include <filesystem>
#include <iosfwd>

#include "indalign/config.hpp"

namespace indalign {

// Stable CLI exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitGateway = 3;
inline constexpr int kExitShapeMismatch = 4;
inline constexpr int kExitEmptyModelInput = 5;

struct CommandOptions {
    std::filesystem::path stub_fixtures;  // non-empty -> StubGateway instead of HTTP
    std::vector<ReportFormat> formats;    // non-empty -> overrides config
    std::filesystem::path predict_input;  // submissions file for `predict`
};

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_extract(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_align(const RunConfig& config, const CommandOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_train(const RunConfig& config, const CommandOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_predict(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_report(const RunConfig& config, const CommandOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace indalign
