#include "lapmap/feature_matrix.hpp"

#include "lapmap/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace lapmap {

namespace {

bool in_domain(double v, ValueDomain domain) {
    switch (domain) {
        case ValueDomain::Binary:
            return v == 0.0 || v == 1.0;
        case ValueDomain::Ternary:
            return v == -1.0 || v == 0.0 || v == 1.0;
        case ValueDomain::Continuous:
            return std::isfinite(v);
    }
    return false;
}

void check_unique(const std::vector<std::string>& labels, const char* kind) {
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw std::invalid_argument(std::string("duplicate ") + kind + " label '" + label + "'");
        }
    }
}

}  // namespace

const char* to_string(ValueDomain domain) {
    switch (domain) {
        case ValueDomain::Binary: return "binary";
        case ValueDomain::Ternary: return "ternary";
        case ValueDomain::Continuous: return "continuous";
    }
    return "?";
}

const char* to_string(Orientation orientation) {
    return orientation == Orientation::LanguagesAsRows ? "languages-as-rows"
                                                       : "parameters-as-rows";
}

bool FeatureMatrix::has_missing() const {
    return values.hasNaN();
}

double FeatureMatrix::row_coverage(Eigen::Index row) const {
    const Eigen::Index c = cols();
    if (c == 0) return 1.0;
    Eigen::Index known = 0;
    for (Eigen::Index j = 0; j < c; ++j) {
        if (!is_missing(values(row, j))) ++known;
    }
    return static_cast<double>(known) / static_cast<double>(c);
}

void FeatureMatrix::validate() const {
    if (values.rows() != static_cast<Eigen::Index>(row_labels.size()) ||
        values.cols() != static_cast<Eigen::Index>(col_labels.size())) {
        throw std::invalid_argument("matrix dimensions do not match label lists");
    }
    check_unique(row_labels, "row");
    check_unique(col_labels, "column");
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index j = 0; j < values.cols(); ++j) {
            const double v = values(i, j);
            if (!is_missing(v) && !in_domain(v, domain)) {
                throw std::invalid_argument("cell (" + row_labels[i] + ", " + col_labels[j] +
                                            ") outside " + to_string(domain) + " domain");
            }
        }
    }
}

FeatureMatrix filter_rows_by_coverage(const FeatureMatrix& m, double min_fraction) {
    if (min_fraction < 0.0 || min_fraction > 1.0) {
        throw std::invalid_argument("min_fraction must lie in [0, 1]");
    }
    std::vector<Eigen::Index> keep;
    keep.reserve(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m.row_coverage(i) >= min_fraction) keep.push_back(i);
    }
    if (keep.empty()) {
        throw InputError("no rows survive coverage filter");
    }

    FeatureMatrix out;
    out.col_labels = m.col_labels;
    out.domain = m.domain;
    out.orientation = m.orientation;
    out.row_labels.reserve(keep.size());
    out.values.resize(static_cast<Eigen::Index>(keep.size()), m.cols());
    for (std::size_t r = 0; r < keep.size(); ++r) {
        out.row_labels.push_back(m.row_labels[keep[r]]);
        out.values.row(static_cast<Eigen::Index>(r)) = m.values.row(keep[r]);
    }
    return out;
}

FeatureMatrix impute_missing(const FeatureMatrix& m, double fill) {
    FeatureMatrix out = m;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            if (FeatureMatrix::is_missing(out.values(i, j))) out.values(i, j) = fill;
        }
    }
    out.domain = ValueDomain::Continuous;
    return out;
}

FeatureMatrix transpose_orientation(const FeatureMatrix& m) {
    FeatureMatrix out;
    out.row_labels = m.col_labels;
    out.col_labels = m.row_labels;
    out.values = m.values.transpose();
    out.domain = m.domain;
    out.orientation = m.orientation == Orientation::LanguagesAsRows
                          ? Orientation::ParametersAsRows
                          : Orientation::LanguagesAsRows;
    return out;
}

}  // namespace lapmap
