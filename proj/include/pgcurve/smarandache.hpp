#pragma once

#include <span>

#include "pgcurve/curve.hpp"
#include "pgcurve/natural.hpp"

// Smarandache curves: normalized sums of moving-frame vectors of a source
// curve.  Only the combinations e1+e2, e1+e3 and e1+e2+e3 are constructible;
// e2+e3 pairs a spacelike with a timelike isotropic vector of equal magnitude
// and is lightlike (zero norm) for every admissible frame, so it is excluded
// from the kind enumeration altogether and documented by a diagnostic.

namespace pg {

enum class SmarandacheKind { E1E2, E1E3, E1E2E3 };

const char* to_string(SmarandacheKind kind);

// Normalized frame-vector sum.  For a valid frame the sum has absolute
// coordinate 1, hence norm exactly 1; the norm is still computed and divided
// out (and guarded) rather than assumed.
Vec3 smarandache_point(const Frame& frame, SmarandacheKind kind);

// Why e2+e3 is not a curve: its norm and vector class, frame by frame.
struct E2E3Diagnostic {
    Vec3 sum;
    double norm = 0.0;
    VectorClass vector_class = VectorClass::Zero;
};

E2E3Diagnostic explain_e2e3_degeneracy(const Frame& frame);

// Smarandache curve of a modeled curve; frames via frenet_frame.
SampledCurve smarandache_curve(const CurveModel& source, SmarandacheKind kind,
                               std::span<const double> grid);

// Smarandache curve straight from natural equations; frames via the
// synthesis engine's closed forms.
SampledCurve smarandache_curve(const NaturalEquations& source, SmarandacheKind kind,
                               std::span<const double> grid,
                               const QuadratureConfig& cfg = {});

} // namespace pg
