#include "lapmap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lapmap {

double quantile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw std::invalid_argument("quantile of an empty sample");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("quantile level must lie in [0, 1]");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 1) return values[0];
    const double h = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

TukeyFences tukey_fences(const std::vector<double>& values, double multiplier) {
    if (values.empty()) {
        throw std::invalid_argument("fences of an empty sample");
    }
    if (multiplier < 0.0) {
        throw std::invalid_argument("fence multiplier must be nonnegative");
    }
    const double q1 = quantile(values, 0.25);
    const double q3 = quantile(values, 0.75);
    const double iqr = q3 - q1;
    return TukeyFences{q1 - multiplier * iqr, q3 + multiplier * iqr};
}

int count_outliers(const std::vector<double>& values, double multiplier) {
    const TukeyFences fences = tukey_fences(values, multiplier);
    int count = 0;
    for (double v : values) {
        if (v < fences.lower || v > fences.upper) ++count;
    }
    return count;
}

double population_variance(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double accum = 0.0;
    for (double v : values) {
        const double d = v - mean;
        accum += d * d;
    }
    return accum / static_cast<double>(values.size());
}

}  // namespace lapmap
