#pragma once

#include <array>
#include <functional>
#include <vector>

#include "pgcurve/vector.hpp"

// Curves, admissibility, curvature/torsion and the Frenet trihedron.
//
// A curve is handed to the library as a position map t -> (x, y, z) plus
// optional analytic derivative maps.  Curves given in arc-length form satisfy
// x(s) = s; curves in a general parameter are reduced to arc-length data
// before any frame is built.  When a derivative map is missing it is replaced
// by central finite differences of the position map.

namespace pg {

enum class Parametrization { ArcLength, General };

enum class CausalCharacter { Spacelike, Timelike };

inline const char* to_string(CausalCharacter c) {
    return c == CausalCharacter::Spacelike ? "spacelike" : "timelike";
}

struct CurveModel {
    std::function<Vec3(double)> position;
    // Analytic derivative maps, orders 1..3; any entry may be empty.
    std::array<std::function<Vec3(double)>, 3> derivative{};
    double s_lo = 0.0;
    double s_hi = 0.0;
    Parametrization kind = Parametrization::ArcLength;

    bool has_derivative(int order) const {
        return order >= 1 && order <= 3 && static_cast<bool>(derivative[order - 1]);
    }
};

// Orthonormal-in-the-degenerate-sense moving trihedron along a curve.
// Invariants (asserted by construction): e1.x = 1, e2.x = e3.x = 0,
// kappa > 0, epsilon = +-1, det(e1, e2, e3) = 1.
struct Frame {
    Vec3 e1, e2, e3;
    double kappa = 0.0;
    double tau = 0.0;
    int epsilon = 0; // sign of <e2, e2>; +1 spacelike normal, -1 timelike
};

struct CurvatureTorsion {
    double kappa = 0.0;
    double tau = 0.0;
};

enum class ViolationKind {
    IsotropicTangent,            // xdot = 0: parametrization not admissible
    InflectionPoint,             // first and second derivatives parallel
    LightlikeTangentProjection,  // (ydot, zdot) lightlike and nonzero
    LightlikeNormalProjection    // (yddot, zddot) lightlike and nonzero
};

const char* to_string(ViolationKind kind);

struct AdmissibilityReport {
    struct Violation {
        double s = 0.0;
        ViolationKind kind{};
    };
    bool admissible = true;
    std::vector<Violation> violations;
};

// Max-abs residuals of the structural equations of the moving frame,
// measured with central differences of the frame fields:
//   e1' - kappa e2,  e2' - tau e3,  e3' - tau e2,
// and of the third-derivative identity gamma''' = kappa' e2 + kappa tau e3.
struct FrenetResiduals {
    double tangent_eq = 0.0;
    double normal_eq = 0.0;
    double binormal_eq = 0.0;
    double third_derivative_identity = 0.0;

    double max() const {
        return std::max({tangent_eq, normal_eq, binormal_eq, third_derivative_identity});
    }
};

// Curvature below this threshold is treated as degenerate, and a normal
// projection whose components agree in magnitude to this relative tolerance
// is treated as lightlike.
inline constexpr double kDegenerateCurvatureTol = 1e-10;

// Relative finite-difference steps (scaled by max(1, |s|)) for derivative
// orders 1..3.  The step grows with the order: an order-k central difference
// divides rounding noise by h^k, so higher orders need wider stencils to keep
// the noise below the truncation error.
struct FdSteps {
    double order1 = 1e-5;
    double order2 = 1e-4;
    double order3 = 1e-3;
};

Vec3 eval_curve(const CurveModel& curve, double s);

// Analytic map when present, otherwise central differences of the position
// map.  Throws Errc::OutOfDomain for s outside the domain and
// Errc::NumericallyUnstable when the difference stencil would leave it.
Vec3 derivatives(const CurveModel& curve, double s, int order,
                 const FdSteps& steps = {});

// Samples the curve at `samples` equispaced parameters and records every
// admissibility violation found.  This is a sampled certificate: it can only
// report what happens at the probe points.
AdmissibilityReport check_admissible(const CurveModel& curve, int samples,
                                     double tol = 1e-9);

// kappa = sqrt|y''^2 - z''^2| and tau = (y'' z''' - y''' z'') / kappa^2 in
// arc-length form; for a general parameter the textbook formulas
// kappa = sqrt|yddot^2 - zddot^2| / xdot^2 and
// tau = (yddot zdddot - ydddot zddot) / (|xdot|^5 kappa^2) are applied
// verbatim.  The general-parameter formulas are exact when the absolute
// coordinate is an affine function of the parameter.
CurvatureTorsion curvature_torsion(const CurveModel& curve, double s);

// Builds the moving trihedron at s.  General-parameter curves are reduced to
// exact arc-length derivatives (chain rule) first; the absolute coordinate
// must be strictly increasing along the parameter.
Frame frenet_frame(const CurveModel& curve, double s);

// Spacelike curves have timelike normals and vice versa.
CausalCharacter causal_character(const Frame& frame);

FrenetResiduals frenet_residuals(const CurveModel& curve,
                                 double a, double b, int samples, double h);

// Same residuals for an externally supplied frame field; used to test frame
// constructions that do not come from a CurveModel (and to show the residuals
// really detect corrupted frames).
FrenetResiduals frenet_residuals(const std::function<Frame(double)>& frame_at,
                                 const std::function<Vec3(double)>& third_derivative,
                                 double a, double b, int samples, double h);

} // namespace pg
