#pragma once

#include <array>
#include <vector>

namespace lapmap {

/// Least-squares fit of f(x) = A * exp(-(x - H)^2 / sigma^2) + V.
/// Parameter order in the error arrays is (A, H, sigma, V).
struct GaussianFitResult {
    double amplitude = 0.0;      // A
    double center = 0.0;         // H
    double width = 0.0;          // sigma, > 0 on converged fits
    double offset = 0.0;         // V
    std::array<double, 4> one_sigma_errors{};          // absolute 1-sigma uncertainties
    std::array<double, 4> one_sigma_errors_percent{};  // 100 * |error / value|
    double residual_norm = 0.0;  // L2 norm of the residual vector
    bool converged = false;
};

/// Fits the four-parameter Gaussian to (x, y) samples: a coarse grid search
/// over (H, sigma) with a linear solve for (A, V), refined by damped
/// Levenberg-Marquardt iterations. The returned residual never exceeds the
/// best grid candidate's. 1-sigma errors come from the linearized
/// covariance at the optimum scaled by the residual variance.
/// Deterministic.
///
/// Throws std::invalid_argument with fewer than 5 points, when all y are
/// equal, or when all x coincide.
GaussianFitResult fit_gaussian(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lapmap
