#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgcurve/curve.hpp"
#include "pgcurve/quadrature.hpp"

// Curve synthesis from natural equations.
//
// Given kappa(s) > 0 and tau(s) on a domain, the curve of the prescribed
// causal character with those invariants is recovered by nested quadrature.
// With T(s) = \int tau and all integration constants zero (base point
// (s_lo, 0, 0)):
//
//   spacelike:  r(s) = (s, -\iint sinh(T) kappa, \iint cosh(T) kappa),
//               e2 = (0, -sinh T, cosh T), e3 = (0, -cosh T, sinh T), eps = -1
//   timelike:   r(s) = (s,  \iint cosh(T) kappa, \iint sinh(T) kappa),
//               e2 = (0,  cosh T, sinh T), e3 = (0,  sinh T, cosh T), eps = +1
//
// Recomputing curvature and torsion from the synthesized curve reproduces the
// inputs; that round trip is the module's main correctness check.

namespace pg {

struct NaturalEquations {
    std::function<double(double)> kappa; // required, > 0 on the domain
    std::function<double(double)> tau;   // required
    CausalCharacter character = CausalCharacter::Spacelike;
    double s_lo = 0.0;
    double s_hi = 0.0;
};

enum class CurveFamily {
    GeneralHelix,   // tau = m * kappa, m != 0
    CircularHelix,  // kappa, tau constant
    Salkowski,      // kappa constant, tau free
    AntiSalkowski   // tau constant, kappa free
};

const char* to_string(CurveFamily family);

struct FamilySpec {
    CurveFamily family = CurveFamily::GeneralHelix;
    CausalCharacter character = CausalCharacter::Spacelike;
    double m = 0.0;       // GeneralHelix slope
    double kappa0 = 0.0;  // constant curvature (CircularHelix, Salkowski)
    double tau0 = 0.0;    // constant torsion (CircularHelix, AntiSalkowski)
    std::function<double(double)> kappa_fn; // GeneralHelix, AntiSalkowski
    std::function<double(double)> tau_fn;   // Salkowski
    double s_lo = 0.0;
    double s_hi = 0.0;
};

// Wires a family description into plain natural equations, validating the
// family constraints (m != 0, kappa0 > 0, required function fields present).
NaturalEquations family_to_natural(const FamilySpec& spec);

struct SampledCurve {
    std::vector<double> params;
    std::vector<Vec3> points;
    std::vector<Frame> frames; // empty, or one frame per parameter
};

// Table-driven synthesis engine.  On construction it integrates T, then the
// first, then the second antiderivative pair on an internal dense grid (at
// least 4x finer than the caller's grid and never coarser than
// cfg.base_grid cells over the domain); queries interpolate those tables.
// Nested integrands bridge between levels with cubic interpolation.
class CurveSynthesizer {
public:
    // grid: strictly increasing output nodes inside [neq.s_lo, neq.s_hi].
    CurveSynthesizer(NaturalEquations neq,
                     std::span<const double> grid,
                     const QuadratureConfig& cfg = {});

    Vec3 position(double s) const;

    // Closed-form frame: e2/e3 from T(s), e1 from the first antiderivatives;
    // kappa and tau are the input natural equations evaluated at s.
    Frame frame(double s) const;

    // Accumulated torsion T(s); exposed for identity checks such as
    // cosh T + sinh T = exp T.
    double torsion_integral(double s) const;

    SampledCurve sample(bool with_frames) const;

    // Arc-length CurveModel backed by the synthesis tables, with analytic
    // derivative maps derived from the generator structure:
    // r'' = kappa * e2 and r''' = kappa' e2 + kappa tau e3 (kappa' by a
    // central difference of the input curvature map).
    CurveModel curve_model() const;

    const NaturalEquations& equations() const;

private:
    struct State;
    std::shared_ptr<const State> state_;
};

// One-call synthesis at the given output grid, frames included.
SampledCurve synthesize(const NaturalEquations& neq,
                        std::span<const double> grid,
                        const QuadratureConfig& cfg = {});

// Frame at a single parameter by direct nested adaptive quadrature, entirely
// independent of the table-driven engine.  Deliberately a second numerical
// route: agreement between this and frames of the synthesized curve is a
// meaningful cross-check precisely because they share no machinery.
Frame closed_form_frame(const NaturalEquations& neq, double s,
                        const QuadratureConfig& cfg = {});

// Reads a sampled curve back as a CurveModel whose position is a local
// degree-7 polynomial interpolant of the samples and whose derivative maps
// are the exact derivatives of that interpolant.  This is the reduction used
// to feed synthesized data back into curvature_torsion / frenet_frame.
CurveModel sampled_interpolant(const SampledCurve& samples);

inline std::vector<double> uniform_grid(double lo, double hi, int nodes) {
    std::vector<double> g(static_cast<size_t>(nodes));
    for (int i = 0; i < nodes; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (nodes - 1);
    return g;
}

} // namespace pg
