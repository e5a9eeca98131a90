#include "indalign/matrix.hpp"

#include <charconv>
#include <fstream>

#include "csv.hpp"
#include "indalign/errors.hpp"
#include "indalign/hash.hpp"

namespace indalign {

Eigen::Index ValueMatrix::column_index(const std::string& column_id) const {
    for (std::size_t j = 0; j < column_ids.size(); ++j) {
        if (column_ids[j] == column_id) return static_cast<Eigen::Index>(j);
    }
    return -1;
}

Eigen::VectorXd ValueMatrix::column(const std::string& column_id) const {
    Eigen::Index j = column_index(column_id);
    if (j < 0) throw UnknownIndicator("unknown column: " + column_id);
    return values.col(j);
}

void write_matrix_csv(const ValueMatrix& m, const std::filesystem::path& path,
                      const std::string& id_column) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    std::vector<std::string> header;
    header.reserve(m.column_ids.size() + 1);
    header.push_back(id_column);
    header.insert(header.end(), m.column_ids.begin(), m.column_ids.end());
    csv::write_row(out, header);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        row.reserve(m.column_ids.size() + 1);
        row.push_back(m.row_ids[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            double v = m.values(i, j);
            row.push_back(is_missing(v) ? std::string() : format_double(v));
        }
        csv::write_row(out, row);
    }
}

ValueMatrix read_matrix_csv(const std::filesystem::path& path) {
    auto records = csv::read_records(path);
    if (records.empty()) throw ParseError("empty matrix file: " + path.string());
    ValueMatrix m;
    const auto& header = records.front().fields;
    if (header.empty()) throw ParseError("matrix header missing", records.front().line);
    m.column_ids.assign(header.begin() + 1, header.end());
    m.row_ids.reserve(records.size() - 1);
    m.values.resize(static_cast<Eigen::Index>(records.size() - 1),
                    static_cast<Eigen::Index>(m.column_ids.size()));
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != header.size()) {
            throw ParseError("matrix row has " + std::to_string(rec.fields.size()) +
                                 " fields, expected " + std::to_string(header.size()),
                             rec.line);
        }
        m.row_ids.push_back(rec.fields[0]);
        for (std::size_t j = 1; j < rec.fields.size(); ++j) {
            const std::string& cell = rec.fields[j];
            double v = kMissing;
            if (!cell.empty()) {
                auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
                if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                    throw ParseError("bad numeric cell '" + cell + "'", rec.line);
                }
            }
            m.values(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(j - 1)) = v;
        }
    }
    return m;
}

}  // namespace indalign
