#include "pgcurve/interpolate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pgcurve/errors.hpp"

namespace pg {

namespace {
constexpr int kMaxWindow = 16; // degree + 1 never exceeds this
}

SampledInterpolant::SampledInterpolant(std::vector<double> nodes,
                                       std::vector<double> values,
                                       int degree,
                                       int stride)
    : nodes_(std::move(nodes)), values_(std::move(values)),
      degree_(degree), stride_(stride) {
    if (degree_ < 1 || degree_ + 1 > kMaxWindow)
        raise(Errc::InvalidArgument, "interpolant: unsupported degree");
    if (nodes_.size() != values_.size())
        raise(Errc::InvalidArgument, "interpolant: node/value count mismatch");
    if (nodes_.size() < static_cast<size_t>(degree_ + 1))
        raise(Errc::InvalidArgument, "interpolant: need at least degree + 1 nodes");
    for (size_t i = 1; i < nodes_.size(); ++i)
        if (!(nodes_[i] > nodes_[i - 1]))
            raise(Errc::InvalidArgument, "interpolant: nodes must be strictly increasing");
    for (double v : values_)
        if (!std::isfinite(v))
            raise(Errc::InvalidArgument, "interpolant: non-finite value");

    const int cells = static_cast<int>(nodes_.size()) - 1;
    const int max_stride = std::max(1, cells / degree_);
    if (stride_ == 0) {
        // Aim for an effective window spacing near 1/128 of the table span.
        stride_ = static_cast<int>(std::llround(cells / 128.0));
    }
    stride_ = std::clamp(stride_, 1, max_stride);
}

int SampledInterpolant::window_start(double s) const {
    const int n = static_cast<int>(nodes_.size());
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), s);
    int idx = static_cast<int>(it - nodes_.begin()) - 1;
    idx = std::clamp(idx, 0, n - 1);
    // Center the strided window on the bracketing node.
    int start = idx - (degree_ / 2) * stride_;
    return std::clamp(start, 0, n - 1 - degree_ * stride_);
}

double SampledInterpolant::value(double s) const { return derivative(s, 0); }

double SampledInterpolant::derivative(double s, int order) const {
    if (order < 0 || order > 3)
        raise(Errc::InvalidArgument, "interpolant: derivative order must be in [0, 3]");
    if (!std::isfinite(s))
        raise(Errc::InvalidArgument, "interpolant: non-finite query");

    const int w = degree_ + 1;
    const int start = window_start(s);
    std::array<double, kMaxWindow> xs{}, c{};
    for (int k = 0; k < w; ++k) {
        xs[static_cast<size_t>(k)] = nodes_[static_cast<size_t>(start + k * stride_)];
        c[static_cast<size_t>(k)] = values_[static_cast<size_t>(start + k * stride_)];
    }

    // Newton divided differences, built in place: c[j] = f[x_0 .. x_j].
    for (int j = 1; j < w; ++j)
        for (int i = w - 1; i >= j; --i)
            c[static_cast<size_t>(i)] =
                (c[static_cast<size_t>(i)] - c[static_cast<size_t>(i - 1)]) /
                (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(i - j)]);

    // Horner evaluation of the Newton form, carrying the first three
    // derivatives along: for p_new = p_old * (s - x_i) + c_i,
    // p_new^(k) = p_old^(k) * (s - x_i) + k * p_old^(k-1).
    double v = c[static_cast<size_t>(w - 1)];
    double v1 = 0.0, v2 = 0.0, v3 = 0.0;
    for (int i = w - 2; i >= 0; --i) {
        const double d = s - xs[static_cast<size_t>(i)];
        v3 = v3 * d + 3.0 * v2;
        v2 = v2 * d + 2.0 * v1;
        v1 = v1 * d + v;
        v = v * d + c[static_cast<size_t>(i)];
    }
    switch (order) {
    case 0: return v;
    case 1: return v1;
    case 2: return v2;
    default: return v3;
    }
}

std::function<double(double)> SampledInterpolant::as_function() const {
    return [ip = *this](double s) { return ip.value(s); };
}

} // namespace pg
