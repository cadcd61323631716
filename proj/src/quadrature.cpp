#include "pgcurve/quadrature.hpp"

#include <cmath>

#include "pgcurve/errors.hpp"

namespace pg {

namespace {

double eval_checked(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        raise(Errc::NumericallyUnstable, "integrand is not finite at s = " + std::to_string(x));
    return v;
}

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic adaptive Simpson with Richardson extrapolation.  `whole` is the
// single-panel estimate over [a, b]; the panel is accepted when the halved
// estimate agrees with it to 15x the local budget, which bounds the true
// error of the extrapolated value by the budget itself.
double adapt(const std::function<double(double)>& f,
             double a, double m, double b,
             double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval_checked(f, lm);
    const double frm = eval_checked(f, rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        raise(Errc::ToleranceNotReached,
              "refinement depth exhausted near s = " + std::to_string(m));
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f,
                 double a, double b,
                 double abs_tol,
                 int max_refinement_depth) {
    if (!(a <= b)) raise(Errc::InvalidArgument, "integrate: a > b");
    if (!(abs_tol > 0.0)) raise(Errc::InvalidArgument, "integrate: abs_tol must be positive");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = eval_checked(f, a);
    const double fm = eval_checked(f, m);
    const double fb = eval_checked(f, b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, a, m, b, fa, fm, fb, whole, abs_tol, max_refinement_depth);
}

std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        double s0,
                                        std::span<const double> grid,
                                        const QuadratureConfig& cfg) {
    if (grid.empty()) raise(Errc::InvalidArgument, "cumulative_integral: empty grid");
    if (std::abs(grid.front() - s0) > 1e-12 * std::max(1.0, std::abs(s0)))
        raise(Errc::InvalidArgument, "cumulative_integral: grid must start at s0");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            raise(Errc::InvalidArgument, "cumulative_integral: grid must be strictly increasing");

    const double panel_tol = cfg.abs_tol / static_cast<double>(grid.size());
    std::vector<double> out(grid.size(), 0.0);
    double acc = 0.0;
    for (size_t i = 1; i < grid.size(); ++i) {
        acc += integrate(f, grid[i - 1], grid[i], panel_tol, cfg.max_refinement_depth);
        out[i] = acc;
    }
    return out;
}

} // namespace pg
