#pragma once

#include <stdexcept>
#include <string>

namespace lapmap {

/// Error raised while reading a feature-matrix CSV stream. Carries the
/// 1-based line number of the offending record.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Error raised when input data is structurally valid but unusable for the
/// requested operation (e.g. no rows survive a coverage filter).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lapmap
