#include "pgcurve/smarandache.hpp"

#include <cmath>

#include "pgcurve/errors.hpp"

namespace pg {

const char* to_string(SmarandacheKind kind) {
    switch (kind) {
    case SmarandacheKind::E1E2:   return "e1e2";
    case SmarandacheKind::E1E3:   return "e1e3";
    case SmarandacheKind::E1E2E3: return "e1e2e3";
    }
    return "unknown kind";
}

namespace {

Vec3 combination(const Frame& frame, SmarandacheKind kind) {
    switch (kind) {
    case SmarandacheKind::E1E2:   return frame.e1 + frame.e2;
    case SmarandacheKind::E1E3:   return frame.e1 + frame.e3;
    case SmarandacheKind::E1E2E3: return frame.e1 + frame.e2 + frame.e3;
    }
    raise(Errc::InvalidArgument, "smarandache_point: unknown kind");
}

} // namespace

Vec3 smarandache_point(const Frame& frame, SmarandacheKind kind) {
    const Vec3 sum = combination(frame, kind);
    // For a valid frame sum.x = 1, so the norm is exactly 1; it is still
    // computed and divided out so that corrupted frames are caught here.
    const double n = norm(sum);
    if (n <= 1e-9)
        raise(Errc::ZeroNormCombination,
              "smarandache_point: frame-vector sum has zero norm");
    return sum / n;
}

E2E3Diagnostic explain_e2e3_degeneracy(const Frame& frame) {
    E2E3Diagnostic diag;
    diag.sum = frame.e2 + frame.e3;
    diag.norm = norm(diag.sum);
    diag.vector_class = classify(diag.sum);
    return diag;
}

SampledCurve smarandache_curve(const CurveModel& source, SmarandacheKind kind,
                               std::span<const double> grid) {
    if (grid.empty())
        raise(Errc::InvalidArgument, "smarandache_curve: empty grid");
    SampledCurve out;
    out.params.assign(grid.begin(), grid.end());
    out.points.reserve(grid.size());
    for (double s : out.params)
        out.points.push_back(smarandache_point(frenet_frame(source, s), kind));
    return out;
}

SampledCurve smarandache_curve(const NaturalEquations& source, SmarandacheKind kind,
                               std::span<const double> grid,
                               const QuadratureConfig& cfg) {
    const CurveSynthesizer engine(source, grid, cfg);
    SampledCurve out;
    out.params.assign(grid.begin(), grid.end());
    out.points.reserve(grid.size());
    for (double s : out.params)
        out.points.push_back(smarandache_point(engine.frame(s), kind));
    return out;
}

} // namespace pg
