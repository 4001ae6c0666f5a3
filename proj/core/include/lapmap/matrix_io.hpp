#pragma once

#include "lapmap/feature_matrix.hpp"

#include <iosfwd>

namespace lapmap {

/// Reads a feature matrix from the CSV layout used by this toolkit:
///
///   id,<col_label_1>,...,<col_label_c>
///   <row_label>,<cell>,...,<cell>
///
/// Cells are "0"/"1" (binary), "-1"/"0"/"1" (ternary) or any real number
/// (continuous); "?" marks a missing cell in every domain. Labels are
/// restricted to [A-Za-z0-9_.-] so no quoting is needed.
///
/// Throws lapmap::ParseError naming the offending 1-based line on a
/// malformed header, duplicate label, out-of-domain cell or ragged row, and
/// when the data section is empty.
FeatureMatrix parse_matrix(std::istream& source, ValueDomain domain);

/// Writes the matrix back in the same CSV layout. Missing cells become "?";
/// known cells are printed in shortest round-trip form, so
/// parse -> serialize -> parse preserves the known/missing pattern and every
/// value bit-exactly.
void serialize_matrix(const FeatureMatrix& m, std::ostream& out);

FeatureMatrix read_matrix_file(const std::string& path, ValueDomain domain);
void write_matrix_file(const FeatureMatrix& m, const std::string& path);

}  // namespace lapmap
