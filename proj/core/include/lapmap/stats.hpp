#pragma once

#include <vector>

namespace lapmap {

/// Quantile by linear interpolation between order statistics
/// (h = (n-1)p, Q = x[floor h] + frac(h) * (x[floor h + 1] - x[floor h])).
/// Throws std::invalid_argument on empty data or p outside [0, 1].
double quantile(std::vector<double> values, double p);

struct TukeyFences {
    double lower = 0.0;
    double upper = 0.0;
};

/// Fences [Q1 - k*IQR, Q3 + k*IQR]; k defaults to the standard 1.5.
TukeyFences tukey_fences(const std::vector<double>& values, double multiplier = 1.5);

/// Number of values strictly outside the Tukey fences.
int count_outliers(const std::vector<double>& values, double multiplier = 1.5);

/// Population variance (divide by n); 0 for empty input.
double population_variance(const std::vector<double>& values);

}  // namespace lapmap
