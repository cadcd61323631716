#pragma once

#include <functional>
#include <vector>

namespace pg {

// Piecewise local polynomial interpolation of tabulated data with exact
// derivatives of the local polynomial up to order three.
//
// For each query the interpolant picks a window of (degree + 1) table nodes
// around the query point, builds the Newton form of the interpolating
// polynomial, and evaluates it (and, on request, its derivatives) there.
// Windows may be strided: a stride of k keeps only every k-th node, widening
// the window without raising the degree.  Wider windows are what make the
// high-order derivatives usable on data carrying rounding-level noise: the
// noise amplification of a third-derivative functional scales like the
// inverse cube of the node spacing, so differentiating through a slightly
// coarsened window trades a tiny amount of truncation error for orders of
// magnitude less noise.
//
// Instances are immutable after construction and safe to share across
// threads.
class SampledInterpolant {
public:
    // nodes must be strictly increasing and have at least degree + 1 entries.
    // stride = 0 picks a stride automatically so that the effective window
    // spacing is about 1/128 of the table span (clamped to the available
    // data); stride = 1 uses consecutive nodes.
    SampledInterpolant(std::vector<double> nodes,
                       std::vector<double> values,
                       int degree = 7,
                       int stride = 0);

    double value(double s) const;

    // order in [0, 3]; derivatives are those of the local polynomial.
    double derivative(double s, int order) const;

    double front() const { return nodes_.front(); }
    double back() const { return nodes_.back(); }

    // View of the interpolant as a plain function, e.g. for re-integration.
    std::function<double(double)> as_function() const;

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    int degree_;
    int stride_;

    int window_start(double s) const;
};

} // namespace pg
