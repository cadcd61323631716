#include "pgcurve/curve.hpp"

#include <cmath>
#include <string>

#include "pgcurve/errors.hpp"

namespace pg {

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::IsotropicTangent:           return "isotropic tangent";
    case ViolationKind::InflectionPoint:            return "inflection point";
    case ViolationKind::LightlikeTangentProjection: return "lightlike tangent projection";
    case ViolationKind::LightlikeNormalProjection:  return "lightlike normal projection";
    }
    return "unknown violation";
}

namespace {

void validate_model(const CurveModel& curve, const char* who) {
    if (!curve.position)
        raise(Errc::InvalidArgument, std::string(who) + ": curve has no position map");
    if (!(curve.s_lo < curve.s_hi) || !std::isfinite(curve.s_lo) || !std::isfinite(curve.s_hi))
        raise(Errc::InvalidArgument, std::string(who) + ": empty or non-finite domain");
}

double domain_slack(const CurveModel& curve) {
    return 1e-12 * std::max({1.0, std::abs(curve.s_lo), std::abs(curve.s_hi)});
}

void require_in_domain(const CurveModel& curve, double s, const char* who) {
    const double slack = domain_slack(curve);
    if (!std::isfinite(s) || s < curve.s_lo - slack || s > curve.s_hi + slack)
        raise(Errc::OutOfDomain,
              std::string(who) + ": s = " + std::to_string(s) + " outside [" +
                  std::to_string(curve.s_lo) + ", " + std::to_string(curve.s_hi) + "]");
}

Vec3 eval_raw(const CurveModel& curve, double s, const char* who) {
    Vec3 p = curve.position(s);
    require_finite(p, who);
    return p;
}

double fd_step(int order, const FdSteps& steps, double s) {
    const double scale = std::max(1.0, std::abs(s));
    switch (order) {
    case 1: return steps.order1 * scale;
    case 2: return steps.order2 * scale;
    default: return steps.order3 * scale;
    }
}

// Central differences of the position map.  Orders 1 and 2 use a 3-point
// stencil, order 3 a 5-point one.
Vec3 fd_derivative(const CurveModel& curve, double s, int order, double h) {
    const auto f = [&](double t) { return eval_raw(curve, t, "derivatives"); };
    switch (order) {
    case 1: {
        const Vec3 a = f(s + h), b = f(s - h);
        return (a - b) / (2.0 * h);
    }
    case 2: {
        const Vec3 a = f(s + h), c = f(s), b = f(s - h);
        return (a - 2.0 * c + b) / (h * h);
    }
    default: {
        const Vec3 p2 = f(s + 2.0 * h), p1 = f(s + h);
        const Vec3 m1 = f(s - h), m2 = f(s - 2.0 * h);
        return (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * h * h * h);
    }
    }
}

double stencil_halfwidth(int order, double h) {
    return (order == 3 ? 2.0 : 1.0) * h;
}

// Like derivatives(), but shifts the stencil center inward instead of
// failing when it would leave the domain.  Only the sampled admissibility
// certificate uses this: near the boundary it certifies the nearest interior
// point the stencil can reach.
Vec3 derivative_for_probe(const CurveModel& curve, double s, int order,
                          const FdSteps& steps) {
    if (curve.has_derivative(order)) {
        Vec3 d = curve.derivative[static_cast<size_t>(order - 1)](s);
        require_finite(d, "check_admissible");
        return d;
    }
    const double h = fd_step(order, steps, s);
    const double span = stencil_halfwidth(order, h);
    double c = std::clamp(s, curve.s_lo + span, curve.s_hi - span);
    if (c - span < curve.s_lo || c + span > curve.s_hi)
        raise(Errc::NumericallyUnstable, "check_admissible: domain narrower than stencil");
    return fd_derivative(curve, c, order, h);
}

struct ArcDerivatives {
    double y1, z1, y2, z2, y3, z3;
};

// Reduces any representation to arc-length derivative data.  Arc-length
// curves are used as-is (after asserting x'(s) = 1); general-parameter curves
// go through the exact chain rule, which requires the absolute coordinate to
// increase strictly along the parameter.
ArcDerivatives arc_derivatives(const CurveModel& curve, double s) {
    const Vec3 d1 = derivatives(curve, s, 1);
    const Vec3 d2 = derivatives(curve, s, 2);
    const Vec3 d3 = derivatives(curve, s, 3);

    if (curve.kind == Parametrization::ArcLength) {
        if (std::abs(d1.x - 1.0) > 1e-9)
            raise(Errc::NumericallyUnstable,
                  "frenet_frame: curve is declared arc-length but x'(s) != 1");
        return {d1.y, d1.z, d2.y, d2.z, d3.y, d3.z};
    }

    const double xd = d1.x;
    if (std::abs(xd) <= kDegenerateCurvatureTol)
        raise(Errc::DegenerateCurvature, "frenet_frame: isotropic tangent (x' = 0)");
    if (xd < 0.0)
        raise(Errc::NumericallyUnstable,
              "frenet_frame: absolute coordinate must increase along the parameter");

    const double xd2 = xd * xd;
    const double xd3 = xd2 * xd;
    const double xd5 = xd3 * xd2;
    const double y1 = d1.y / xd;
    const double z1 = d1.z / xd;
    const double y2 = (d2.y * xd - d1.y * d2.x) / xd3;
    const double z2 = (d2.z * xd - d1.z * d2.x) / xd3;
    const double y3 =
        (d3.y * xd2 - 3.0 * d2.y * xd * d2.x + 3.0 * d1.y * d2.x * d2.x - d1.y * xd * d3.x) / xd5;
    const double z3 =
        (d3.z * xd2 - 3.0 * d2.z * xd * d2.x + 3.0 * d1.z * d2.x * d2.x - d1.z * xd * d3.x) / xd5;
    return {y1, z1, y2, z2, y3, z3};
}

bool lightlike_pair(double p, double q, double tol) {
    const double m = std::max(std::abs(p), std::abs(q));
    if (m <= tol) return false; // zero projection, not lightlike
    const double d = p * p - q * q;
    return std::abs(d) <= tol * std::max(1.0, m * m);
}

} // namespace

Vec3 eval_curve(const CurveModel& curve, double s) {
    validate_model(curve, "eval_curve");
    require_in_domain(curve, s, "eval_curve");
    return eval_raw(curve, s, "eval_curve");
}

Vec3 derivatives(const CurveModel& curve, double s, int order, const FdSteps& steps) {
    validate_model(curve, "derivatives");
    if (order < 1 || order > 3)
        raise(Errc::InvalidArgument, "derivatives: order must be 1, 2 or 3");
    require_in_domain(curve, s, "derivatives");

    if (curve.has_derivative(order)) {
        Vec3 d = curve.derivative[static_cast<size_t>(order - 1)](s);
        require_finite(d, "derivatives");
        return d;
    }

    const double h = fd_step(order, steps, s);
    const double span = stencil_halfwidth(order, h);
    if (s - span < curve.s_lo || s + span > curve.s_hi)
        raise(Errc::NumericallyUnstable,
              "derivatives: difference stencil leaves the domain at s = " + std::to_string(s));
    Vec3 d = fd_derivative(curve, s, order, h);
    require_finite(d, "derivatives");
    return d;
}

AdmissibilityReport check_admissible(const CurveModel& curve, int samples, double tol) {
    validate_model(curve, "check_admissible");
    if (samples < 2)
        raise(Errc::InvalidArgument, "check_admissible: need at least 2 samples");

    const FdSteps steps{};
    AdmissibilityReport report;
    for (int i = 0; i < samples; ++i) {
        const double s = curve.s_lo +
            (curve.s_hi - curve.s_lo) * static_cast<double>(i) / (samples - 1);
        const Vec3 d1 = derivative_for_probe(curve, s, 1, steps);
        const Vec3 d2 = derivative_for_probe(curve, s, 2, steps);

        if (std::abs(d1.x) <= tol)
            report.violations.push_back({s, ViolationKind::IsotropicTangent});
        if (max_abs_component(cross(d1, d2)) <= tol)
            report.violations.push_back({s, ViolationKind::InflectionPoint});
        if (lightlike_pair(d1.y, d1.z, tol))
            report.violations.push_back({s, ViolationKind::LightlikeTangentProjection});
        if (lightlike_pair(d2.y, d2.z, tol))
            report.violations.push_back({s, ViolationKind::LightlikeNormalProjection});
    }
    report.admissible = report.violations.empty();
    return report;
}

CurvatureTorsion curvature_torsion(const CurveModel& curve, double s) {
    validate_model(curve, "curvature_torsion");
    require_in_domain(curve, s, "curvature_torsion");

    if (curve.kind == Parametrization::ArcLength) {
        const ArcDerivatives a = arc_derivatives(curve, s);
        const double q = a.y2 * a.y2 - a.z2 * a.z2;
        const double kappa = std::sqrt(std::abs(q));
        if (kappa <= kDegenerateCurvatureTol)
            raise(Errc::DegenerateCurvature,
                  "curvature_torsion: kappa vanishes at s = " + std::to_string(s));
        const double tau = (a.y2 * a.z3 - a.y3 * a.z2) / (kappa * kappa);
        return {kappa, tau};
    }

    // General parameter: textbook formulas, exact for an affine absolute
    // coordinate.
    const Vec3 d1 = derivatives(curve, s, 1);
    const Vec3 d2 = derivatives(curve, s, 2);
    const Vec3 d3 = derivatives(curve, s, 3);
    const double xd = d1.x;
    if (std::abs(xd) <= kDegenerateCurvatureTol)
        raise(Errc::DegenerateCurvature, "curvature_torsion: isotropic tangent (x' = 0)");
    const double kappa = std::sqrt(std::abs(d2.y * d2.y - d2.z * d2.z)) / (xd * xd);
    if (kappa <= kDegenerateCurvatureTol)
        raise(Errc::DegenerateCurvature,
              "curvature_torsion: kappa vanishes at s = " + std::to_string(s));
    const double ax = std::abs(xd);
    const double tau = (d2.y * d3.z - d3.y * d2.z) /
                       (ax * ax * ax * ax * ax * kappa * kappa);
    return {kappa, tau};
}

Frame frenet_frame(const CurveModel& curve, double s) {
    validate_model(curve, "frenet_frame");
    require_in_domain(curve, s, "frenet_frame");

    const ArcDerivatives a = arc_derivatives(curve, s);
    const double m2 = std::max(std::abs(a.y2), std::abs(a.z2));
    if (m2 <= kDegenerateCurvatureTol)
        raise(Errc::DegenerateCurvature,
              "frenet_frame: vanishing normal projection at s = " + std::to_string(s));
    if (std::abs(std::abs(a.y2) - std::abs(a.z2)) <= kDegenerateCurvatureTol * m2)
        raise(Errc::LightlikeNormal,
              "frenet_frame: lightlike normal projection at s = " + std::to_string(s));

    const double q = a.y2 * a.y2 - a.z2 * a.z2;
    const double kappa = std::sqrt(std::abs(q));
    const int eps = q > 0.0 ? 1 : -1;
    const double tau = (a.y2 * a.z3 - a.y3 * a.z2) / std::abs(q);

    Frame frame;
    frame.e1 = {1.0, a.y1, a.z1};
    frame.e2 = {0.0, a.y2 / kappa, a.z2 / kappa};
    frame.e3 = {0.0, eps * a.z2 / kappa, eps * a.y2 / kappa};
    frame.kappa = kappa;
    frame.tau = tau;
    frame.epsilon = eps;
    return frame;
}

CausalCharacter causal_character(const Frame& frame) {
    switch (classify(frame.e2)) {
    case VectorClass::SpacelikeIsotropic: return CausalCharacter::Timelike;
    case VectorClass::TimelikeIsotropic:  return CausalCharacter::Spacelike;
    default:
        raise(Errc::LightlikeNormal, "causal_character: normal is neither spacelike nor timelike");
    }
}

FrenetResiduals frenet_residuals(const std::function<Frame(double)>& frame_at,
                                 const std::function<Vec3(double)>& third_derivative,
                                 double a, double b, int samples, double h) {
    if (!(a < b)) raise(Errc::InvalidArgument, "frenet_residuals: empty interval");
    if (samples < 1) raise(Errc::InvalidArgument, "frenet_residuals: need at least 1 sample");
    if (!(h > 0.0)) raise(Errc::InvalidArgument, "frenet_residuals: step must be positive");

    FrenetResiduals res;
    for (int i = 0; i < samples; ++i) {
        const double s = samples == 1
            ? 0.5 * (a + b)
            : a + (b - a) * static_cast<double>(i) / (samples - 1);
        const Frame f0 = frame_at(s);
        const Frame fp = frame_at(s + h);
        const Frame fm = frame_at(s - h);

        const Vec3 de1 = (fp.e1 - fm.e1) / (2.0 * h);
        const Vec3 de2 = (fp.e2 - fm.e2) / (2.0 * h);
        const Vec3 de3 = (fp.e3 - fm.e3) / (2.0 * h);
        const double dkappa = (fp.kappa - fm.kappa) / (2.0 * h);

        res.tangent_eq = std::max(res.tangent_eq, max_abs_component(de1 - f0.kappa * f0.e2));
        res.normal_eq = std::max(res.normal_eq, max_abs_component(de2 - f0.tau * f0.e3));
        res.binormal_eq = std::max(res.binormal_eq, max_abs_component(de3 - f0.tau * f0.e2));

        const Vec3 jerk = third_derivative(s);
        const Vec3 model = dkappa * f0.e2 + f0.kappa * f0.tau * f0.e3;
        res.third_derivative_identity =
            std::max(res.third_derivative_identity, max_abs_component(jerk - model));
    }
    return res;
}

FrenetResiduals frenet_residuals(const CurveModel& curve,
                                 double a, double b, int samples, double h) {
    validate_model(curve, "frenet_residuals");
    require_in_domain(curve, a, "frenet_residuals");
    require_in_domain(curve, b, "frenet_residuals");

    // Keep every frame evaluation (and any interior difference stencil)
    // inside the domain.
    double margin = h * (1.0 + 1e-6);
    const bool needs_fd = !(curve.has_derivative(1) && curve.has_derivative(2) &&
                            curve.has_derivative(3));
    if (needs_fd) {
        const FdSteps steps{};
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        margin += 2.0 * steps.order3 * scale * 1.01;
    }
    const double lo = a + margin;
    const double hi = b - margin;
    if (!(lo < hi))
        raise(Errc::InvalidArgument, "frenet_residuals: interval too narrow for step");

    const auto frame_at = [&](double s) { return frenet_frame(curve, s); };
    const auto third = [&](double s) {
        const ArcDerivatives d = arc_derivatives(curve, s);
        return Vec3{0.0, d.y3, d.z3};
    };
    return frenet_residuals(frame_at, third, lo, hi, samples, h);
}

} // namespace pg
