#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

namespace indalign {

// Dense submissions-by-columns value grid. NaN marks a missing value.
struct ValueMatrix {
    std::vector<std::string> row_ids;     // submission ids, corpus order
    std::vector<std::string> column_ids;  // indicator or criterion ids
    Eigen::MatrixXd values;               // row_ids.size() x column_ids.size()

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }

    // Column by id, values in row order. Throws UnknownIndicator if absent.
    Eigen::VectorXd column(const std::string& column_id) const;
    Eigen::Index column_index(const std::string& column_id) const;  // -1 if absent
};

inline bool is_missing(double v) { return std::isnan(v); }
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

// CSV with a leading id column; empty cell = missing. Integral values are
// written without a decimal point, everything else in shortest round-trip form.
void write_matrix_csv(const ValueMatrix& m, const std::filesystem::path& path,
                      const std::string& id_column = "submission_id");
ValueMatrix read_matrix_csv(const std::filesystem::path& path);

}  // namespace indalign
