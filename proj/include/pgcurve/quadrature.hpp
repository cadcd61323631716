#pragma once

#include <functional>
#include <span>
#include <vector>

namespace pg {

// Controls for the adaptive quadrature used throughout curve synthesis.
struct QuadratureConfig {
    double abs_tol = 1e-10;       // absolute error budget for a full sweep
    int max_refinement_depth = 24; // panel bisection depth before giving up
    int base_grid = 64;            // minimum number of internal table cells
};

// Definite integral of f over [a, b] by adaptive composite Simpson with
// Richardson acceptance.  Throws Errc::ToleranceNotReached when the depth
// budget is exhausted and Errc::NumericallyUnstable on non-finite integrand
// values.  a <= b is required.
double integrate(const std::function<double(double)>& f,
                 double a, double b,
                 double abs_tol,
                 int max_refinement_depth);

// Cumulative integral F(grid[i]) = \int_{s0}^{grid[i]} f, with F[0] = 0.
// The grid must be strictly increasing and start at s0.  Each panel
// grid[i] -> grid[i+1] is integrated adaptively with an error budget of
// cfg.abs_tol / grid.size(), so the accumulated error stays below
// cfg.abs_tol over the whole sweep.
std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        double s0,
                                        std::span<const double> grid,
                                        const QuadratureConfig& cfg);

} // namespace pg
