#include "lapmap/matrix_io.hpp"

#include "lapmap/errors.hpp"
#include "lapmap/reports.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace lapmap {

namespace {

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
        if (!ok) return false;
    }
    return true;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_cell(const std::string& token, ValueDomain domain, int line) {
    if (token == "?") return FeatureMatrix::missing_value();
    switch (domain) {
        case ValueDomain::Binary:
            if (token == "0") return 0.0;
            if (token == "1") return 1.0;
            throw ParseError(line, "cell value '" + token + "' outside binary domain {0,1,?}");
        case ValueDomain::Ternary:
            if (token == "-1") return -1.0;
            if (token == "0") return 0.0;
            if (token == "1") return 1.0;
            throw ParseError(line, "cell value '" + token + "' outside ternary domain {-1,0,1,?}");
        case ValueDomain::Continuous: {
            double v = 0.0;
            const char* begin = token.data();
            const char* end = begin + token.size();
            auto [ptr, ec] = std::from_chars(begin, end, v);
            if (ec != std::errc() || ptr != end) {
                throw ParseError(line, "cell value '" + token + "' is not a number");
            }
            return v;
        }
    }
    throw ParseError(line, "unknown value domain");
}

}  // namespace

FeatureMatrix parse_matrix(std::istream& source, ValueDomain domain) {
    std::string line;
    int line_no = 0;

    if (!std::getline(source, line)) {
        throw ParseError(1, "empty input; expected header 'id,<col>,...'");
    }
    ++line_no;
    auto header = split_csv_line(line);
    if (header.empty() || header[0] != "id") {
        throw ParseError(line_no, "malformed header; first field must be 'id'");
    }

    FeatureMatrix m;
    m.domain = domain;
    m.orientation = Orientation::LanguagesAsRows;
    m.col_labels.assign(header.begin() + 1, header.end());
    std::unordered_set<std::string> seen_cols;
    for (const auto& label : m.col_labels) {
        if (!valid_label(label)) {
            throw ParseError(line_no, "invalid column label '" + label + "'");
        }
        if (!seen_cols.insert(label).second) {
            throw ParseError(line_no, "duplicate column label '" + label + "'");
        }
    }
    const std::size_t n_cols = m.col_labels.size();

    std::vector<std::vector<double>> rows;
    std::unordered_set<std::string> seen_rows;
    while (std::getline(source, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != n_cols + 1) {
            throw ParseError(line_no, "ragged row: expected " + std::to_string(n_cols + 1) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        if (!valid_label(fields[0])) {
            throw ParseError(line_no, "invalid row label '" + fields[0] + "'");
        }
        if (!seen_rows.insert(fields[0]).second) {
            throw ParseError(line_no, "duplicate row label '" + fields[0] + "'");
        }
        m.row_labels.push_back(fields[0]);
        std::vector<double> row(n_cols);
        for (std::size_t j = 0; j < n_cols; ++j) {
            row[j] = parse_cell(fields[j + 1], domain, line_no);
        }
        rows.push_back(std::move(row));
    }

    if (rows.empty()) {
        throw ParseError(line_no, "no data rows");
    }

    m.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n_cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return m;
}

void serialize_matrix(const FeatureMatrix& m, std::ostream& out) {
    out << "id";
    for (const auto& label : m.col_labels) out << ',' << label;
    out << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << m.row_labels[i];
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double v = m.values(i, j);
            out << ',';
            if (FeatureMatrix::is_missing(v)) {
                out << '?';
            } else {
                out << format_double(v);
            }
        }
        out << '\n';
    }
}

FeatureMatrix read_matrix_file(const std::string& path, ValueDomain domain) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open input file '" + path + "'");
    }
    return parse_matrix(in, domain);
}

void write_matrix_file(const FeatureMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open output file '" + path + "'");
    }
    serialize_matrix(m, out);
}

}  // namespace lapmap
