#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace lapmap {

/// Value domain of the cells of a feature matrix.
///
/// Binary and Ternary are the domains accepted on input; Continuous is the
/// domain after imputation, when cells may hold arbitrary reals (e.g. the
/// 0.5 fill used for unresolved binary features).
enum class ValueDomain { Binary, Ternary, Continuous };

/// Which entities the rows of the matrix represent. Input files are
/// languages-as-rows; the graph analysis usually runs on the transpose.
enum class Orientation { LanguagesAsRows, ParametersAsRows };

/// Dense labeled matrix of feature values with explicit missing cells.
///
/// Missing cells are stored as NaN; everything else is a known value in the
/// declared domain. Instances are immutable in spirit: every operation
/// returns a new matrix.
struct FeatureMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Eigen::MatrixXd values;  // rows() == row_labels.size(), cols() == col_labels.size()
    ValueDomain domain = ValueDomain::Binary;
    Orientation orientation = Orientation::LanguagesAsRows;

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }

    static bool is_missing(double cell) { return std::isnan(cell); }
    static double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }

    bool has_missing() const;

    /// Fraction of known cells in one row. A row with zero columns counts as
    /// fully covered.
    double row_coverage(Eigen::Index row) const;

    /// Throws std::invalid_argument if labels are duplicated, dimensions do
    /// not match the label lists, or a known cell falls outside the domain.
    void validate() const;
};

const char* to_string(ValueDomain domain);
const char* to_string(Orientation orientation);

/// Keeps exactly the rows whose fraction of known cells is >= min_fraction.
/// Column set and relative row order are unchanged.
///
/// Throws lapmap::InputError if no rows survive.
FeatureMatrix filter_rows_by_coverage(const FeatureMatrix& m, double min_fraction);

/// Replaces every missing cell with `fill`. Known cells are untouched and
/// the domain becomes Continuous.
FeatureMatrix impute_missing(const FeatureMatrix& m, double fill);

/// Swaps rows and columns together with their labels and flips the
/// orientation flag. Involutive.
FeatureMatrix transpose_orientation(const FeatureMatrix& m);

}  // namespace lapmap
