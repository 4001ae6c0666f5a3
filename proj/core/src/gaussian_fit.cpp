#include "lapmap/gaussian_fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lapmap {

namespace {

// Model: f(x) = A * exp(-(x - H)^2 / sigma^2) + V.
struct Params {
    double a = 0.0;
    double h = 0.0;
    double sigma = 1.0;
    double v = 0.0;
};

Eigen::VectorXd model_values(const Eigen::VectorXd& x, const Params& p) {
    return p.a * (-(x.array() - p.h).square() / (p.sigma * p.sigma)).exp() + p.v;
}

double residual_norm_of(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Params& p) {
    return (model_values(x, p) - y).norm();
}

// Least-squares (A, V) for fixed (H, sigma); falls back to a flat fit when
// the basis function is numerically constant.
Params solve_linear(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double h, double sigma) {
    const Eigen::ArrayXd g = (-(x.array() - h).square() / (sigma * sigma)).exp();
    const double n = static_cast<double>(x.size());
    const double sg = g.sum();
    const double sgg = (g * g).sum();
    const double sy = y.sum();
    const double sgy = (g * y.array()).sum();
    const double det = n * sgg - sg * sg;
    Params p;
    p.h = h;
    p.sigma = sigma;
    if (det > 1e-12 * n * std::max(sgg, 1e-300)) {
        p.a = (n * sgy - sg * sy) / det;
        p.v = (sgg * sy - sg * sgy) / det;
    } else {
        p.a = 0.0;
        p.v = sy / n;
    }
    return p;
}

void fill_jacobian(const Eigen::VectorXd& x, const Params& p, Eigen::MatrixXd& jac,
                   Eigen::VectorXd& fitted) {
    const Eigen::ArrayXd dx = x.array() - p.h;
    const double s2 = p.sigma * p.sigma;
    const Eigen::ArrayXd g = (-dx.square() / s2).exp();
    fitted = (p.a * g + p.v).matrix();
    jac.col(0) = g.matrix();
    jac.col(1) = (p.a * g * 2.0 * dx / s2).matrix();
    jac.col(2) = (p.a * g * 2.0 * dx.square() / (s2 * p.sigma)).matrix();
    jac.col(3).setOnes();
}

}  // namespace

GaussianFitResult fit_gaussian(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("x and y must have equal length");
    }
    if (xs.size() < 5) {
        throw std::invalid_argument("gaussian fit needs at least 5 points");
    }
    const auto [x_min_it, x_max_it] = std::minmax_element(xs.begin(), xs.end());
    if (*x_min_it == *x_max_it) {
        throw std::invalid_argument("gaussian fit needs distinct x values");
    }
    if (std::all_of(ys.begin(), ys.end(), [&](double v) { return v == ys.front(); })) {
        throw std::invalid_argument("gaussian fit is degenerate for constant y");
    }

    const Eigen::Index n = static_cast<Eigen::Index>(xs.size());
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(xs.data(), n);
    Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(ys.data(), n);
    const double span = *x_max_it - *x_min_it;

    // Coarse grid over center and width; amplitude and offset come from the
    // exact linear subproblem at each grid node.
    static constexpr double kWidthFractions[] = {0.02, 0.035, 0.06,  0.1, 0.15, 0.22, 0.3,
                                                 0.45, 0.6,   0.8,  1.0, 1.5,  2.5};
    constexpr int kCenterSteps = 41;
    Params best;
    double best_norm = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kCenterSteps; ++i) {
        const double h = *x_min_it + span * static_cast<double>(i) / (kCenterSteps - 1);
        for (double frac : kWidthFractions) {
            const Params candidate = solve_linear(x, y, h, frac * span);
            const double norm = residual_norm_of(x, y, candidate);
            if (norm < best_norm) {
                best_norm = norm;
                best = candidate;
            }
        }
    }
    const double grid_norm = best_norm;

    // Levenberg-Marquardt refinement, keeping the best parameters seen so the
    // result can never be worse than the grid stage.
    Params current = best;
    double current_norm = best_norm;
    double lambda = 1e-3;
    bool converged = false;
    Eigen::MatrixXd jac(n, 4);
    Eigen::VectorXd fitted(n);
    const double sigma_floor = span * 1e-12;
    for (int iter = 0; iter < 200; ++iter) {
        fill_jacobian(x, current, jac, fitted);
        const Eigen::VectorXd residual = fitted - y;
        const Eigen::Matrix4d jtj = jac.transpose() * jac;
        const Eigen::Vector4d grad = jac.transpose() * residual;

        bool accepted = false;
        for (int attempt = 0; attempt < 40; ++attempt) {
            Eigen::Matrix4d damped = jtj;
            for (int d = 0; d < 4; ++d) {
                damped(d, d) += lambda * std::max(jtj(d, d), 1e-12);
            }
            const Eigen::Vector4d step = damped.ldlt().solve(-grad);
            if (!step.allFinite()) {
                lambda *= 10.0;
                continue;
            }
            Params trial = current;
            trial.a += step(0);
            trial.h += step(1);
            trial.sigma += step(2);
            trial.v += step(3);
            trial.sigma = std::max(std::abs(trial.sigma), sigma_floor);
            const double trial_norm = residual_norm_of(x, y, trial);
            if (trial_norm <= current_norm) {
                const double improvement = current_norm - trial_norm;
                const double step_scale =
                    (step.array().abs() /
                     (Eigen::Vector4d(current.a, current.h, current.sigma, current.v)
                          .array()
                          .abs() +
                      1e-12))
                        .maxCoeff();
                current = trial;
                current_norm = trial_norm;
                lambda = std::max(lambda * 0.25, 1e-12);
                accepted = true;
                if (improvement <= 1e-14 * (1.0 + current_norm) || step_scale < 1e-11) {
                    converged = true;
                }
                break;
            }
            lambda *= 10.0;
        }
        if (current_norm < best_norm) {
            best_norm = current_norm;
            best = current;
        }
        if (converged || !accepted) {
            converged = converged || accepted || current_norm <= grid_norm;
            break;
        }
    }
    if (current_norm <= best_norm) {
        best = current;
        best_norm = current_norm;
    }
    best.sigma = std::abs(best.sigma);

    GaussianFitResult result;
    result.amplitude = best.a;
    result.center = best.h;
    result.width = best.sigma;
    result.offset = best.v;
    result.residual_norm = best_norm;
    result.converged = converged;

    // 1-sigma errors from the linearized covariance (J^T J)^-1 scaled by the
    // residual variance with n - 4 degrees of freedom.
    fill_jacobian(x, best, jac, fitted);
    const Eigen::VectorXd residual = fitted - y;
    const double dof = static_cast<double>(n - 4);
    const double variance = residual.squaredNorm() / dof;
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    const Eigen::Matrix4d cov =
        variance * jtj.completeOrthogonalDecomposition().pseudoInverse();
    const double values[4] = {best.a, best.h, best.sigma, best.v};
    for (int i = 0; i < 4; ++i) {
        const double var_i = std::max(cov(i, i), 0.0);
        result.one_sigma_errors[i] = std::sqrt(var_i);
        if (values[i] != 0.0) {
            result.one_sigma_errors_percent[i] =
                100.0 * result.one_sigma_errors[i] / std::abs(values[i]);
        } else {
            result.one_sigma_errors_percent[i] =
                result.one_sigma_errors[i] == 0.0
                    ? 0.0
                    : std::numeric_limits<double>::infinity();
        }
    }
    return result;
}

}  // namespace lapmap
