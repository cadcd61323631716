#include "pgcurve/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "pgcurve/errors.hpp"
#include "pgcurve/fixtures.hpp"
#include "pgcurve/natural.hpp"
#include "pgcurve/smarandache.hpp"

namespace pg {

namespace {

// Pinned acceptance tolerances for the reference-example suite.
constexpr double kClosedFormTol = 1e-9;  // closed-form curvature/torsion/frames/rows
constexpr double kIdentityTol = 1e-9;    // det = 1 and <e2,e2><e3,e3> = -1
constexpr double kDegeneracyTol = 1e-9;  // |e2 + e3| norm
constexpr double kResidualTol = 1e-6;    // structural-equation residuals
constexpr double kAgreementTol = 1e-6;   // direct quadrature frames vs synthesized frames
constexpr double kRoundTripTol = 1e-4;   // natural equations -> curve -> invariants
constexpr double kResidualStep = 1e-5;

// Fraction of the window treated as boundary for the round trip: the sample
// interpolant differentiates through one-sided windows there, which costs
// accuracy that interior nodes do not pay.
constexpr double kInteriorCut = 0.08;

struct Worst {
    double err = -1.0;
    double at = 0.0;
    double expected = 0.0;
    double computed = 0.0;

    void update(double s, double e, double c) {
        const double d = std::abs(e - c);
        if (d > err) {
            err = d;
            at = s;
            expected = e;
            computed = c;
        }
    }
    void update_vec(double s, const Vec3& e, const Vec3& c) {
        update(s, e.x, c.x);
        update(s, e.y, c.y);
        update(s, e.z, c.z);
    }
};

VerifyCheck make_check(std::string name, const Worst& w, double tol) {
    VerifyCheck check;
    check.name = std::move(name);
    check.expected = w.expected;
    check.computed = w.computed;
    check.abs_error = std::max(w.err, 0.0);
    check.tolerance = tol;
    check.pass = check.abs_error <= tol;
    return check;
}

VerifyCheck make_flag_check(std::string name, bool ok) {
    VerifyCheck check;
    check.name = std::move(name);
    check.expected = 1.0;
    check.computed = ok ? 1.0 : 0.0;
    check.abs_error = ok ? 0.0 : 1.0;
    check.tolerance = 0.5;
    check.pass = ok;
    return check;
}

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.x * (b.y * c.z - b.z * c.y) -
           a.y * (b.x * c.z - b.z * c.x) +
           a.z * (b.x * c.y - b.y * c.x);
}

double frame_distance(const Frame& a, const Frame& b) {
    double d = std::max({max_abs_component(a.e1 - b.e1),
                         max_abs_component(a.e2 - b.e2),
                         max_abs_component(a.e3 - b.e3)});
    d = std::max(d, std::abs(a.kappa - b.kappa));
    d = std::max(d, std::abs(a.tau - b.tau));
    return d;
}

void verify_example(VerifyReport& report, const ReferenceExample& ex,
                    const QuadratureConfig& cfg) {
    const std::string p = "example" + std::to_string(ex.id) + "/";
    const auto grid = uniform_grid(ex.window_lo, ex.window_hi, 201);

    Worst w_kappa, w_tau, w_e1, w_e2, w_e3, w_eps, w_det, w_metric, w_norm;
    Worst w_s12, w_s13, w_s123;
    bool character_ok = true;
    bool lightlike_ok = true;

    for (double s : grid) {
        const CurvatureTorsion ct = curvature_torsion(ex.curve, s);
        w_kappa.update(s, ex.kappa_ref(s), ct.kappa);
        w_tau.update(s, ex.tau_ref(s), ct.tau);

        const Frame f = frenet_frame(ex.curve, s);
        w_e1.update_vec(s, ex.e1_ref(s), f.e1);
        w_e2.update_vec(s, ex.e2_ref(s), f.e2);
        w_e3.update_vec(s, ex.e3_ref(s), f.e3);
        w_eps.update(s, ex.epsilon_ref, f.epsilon);
        character_ok = character_ok && causal_character(f) == ex.character_ref;

        w_det.update(s, 1.0, det3(f.e1, f.e2, f.e3));
        w_metric.update(s, -1.0, dot(f.e2, f.e2) * dot(f.e3, f.e3));

        const E2E3Diagnostic diag = explain_e2e3_degeneracy(f);
        w_norm.update(s, 0.0, diag.norm);
        lightlike_ok = lightlike_ok && diag.vector_class == VectorClass::Lightlike;

        w_s12.update_vec(s, ex.expected_e1e2(s), smarandache_point(f, SmarandacheKind::E1E2));
        w_s13.update_vec(s, ex.expected_e1e3(s), smarandache_point(f, SmarandacheKind::E1E3));
        w_s123.update_vec(s, ex.expected_e1e2e3(s),
                          smarandache_point(f, SmarandacheKind::E1E2E3));
    }

    report.checks.push_back(make_check(p + "curvature", w_kappa, kClosedFormTol));
    report.checks.push_back(make_check(p + "torsion", w_tau, kClosedFormTol));
    report.checks.push_back(make_check(p + "frame_e1", w_e1, kClosedFormTol));
    report.checks.push_back(make_check(p + "frame_e2", w_e2, kClosedFormTol));
    report.checks.push_back(make_check(p + "frame_e3", w_e3, kClosedFormTol));
    report.checks.push_back(make_check(p + "epsilon", w_eps, kClosedFormTol));
    report.checks.push_back(make_flag_check(p + "causal_character", character_ok));
    report.checks.push_back(make_check(p + "frame_determinant", w_det, kIdentityTol));
    report.checks.push_back(make_check(p + "frame_metric_product", w_metric, kIdentityTol));
    report.checks.push_back(make_check(p + "e2e3_combination_norm", w_norm, kDegeneracyTol));
    report.checks.push_back(make_flag_check(p + "e2e3_combination_lightlike", lightlike_ok));

    const auto push_row = [&](const char* label, const Worst& w, bool consistent,
                              const char* actually) {
        if (consistent) {
            report.checks.push_back(make_check(p + "smarandache_" + label, w, kClosedFormTol));
        } else {
            VerifyDiscrepancy d;
            d.name = p + "smarandache_" + label;
            d.note = std::string("published row for ") + label +
                     " reproduces the " + actually +
                     " combination; the defining sum differs as measured";
            d.max_deviation = std::max(w.err, 0.0);
            report.discrepancies.push_back(std::move(d));
        }
    };
    push_row("e1e2", w_s12, ex.e1e2_row_consistent, "e1+e3");
    push_row("e1e3", w_s13, ex.e1e3_row_consistent, "e1+e2+e3");
    push_row("e1e2e3", w_s123, ex.e1e2e3_row_consistent, "");

    // Structural equations of the moving frame.
    const FrenetResiduals res =
        frenet_residuals(ex.curve, ex.window_lo, ex.window_hi, 201, kResidualStep);
    Worst w_res;
    w_res.update(ex.window_lo, 0.0, res.max());
    report.checks.push_back(make_check(p + "frenet_residuals", w_res, kResidualTol));

    // Round trip: natural equations -> synthesized samples -> interpolant ->
    // recomputed invariants at interior nodes.
    const auto roundtrip_grid = uniform_grid(ex.natural.s_lo, ex.natural.s_hi, 401);
    const SampledCurve synth = synthesize(ex.natural, roundtrip_grid, cfg);
    const CurveModel interp = sampled_interpolant(synth);
    const double len = ex.natural.s_hi - ex.natural.s_lo;
    Worst w_rk, w_rt, w_reps;
    for (double s : roundtrip_grid) {
        if (s < ex.natural.s_lo + kInteriorCut * len ||
            s > ex.natural.s_hi - kInteriorCut * len)
            continue;
        const CurvatureTorsion ct = curvature_torsion(interp, s);
        w_rk.update(s, ex.natural.kappa(s), ct.kappa);
        w_rt.update(s, ex.natural.tau(s), ct.tau);
    }
    const int eps_expected = ex.natural.character == CausalCharacter::Spacelike ? -1 : 1;
    for (int i = 1; i <= 5; ++i) {
        const double s = ex.natural.s_lo + len * static_cast<double>(i) / 6.0;
        w_reps.update(s, eps_expected, frenet_frame(interp, s).epsilon);
    }
    report.checks.push_back(make_check(p + "roundtrip_curvature", w_rk, kRoundTripTol));
    report.checks.push_back(make_check(p + "roundtrip_torsion", w_rt, kRoundTripTol));
    report.checks.push_back(make_check(p + "roundtrip_epsilon", w_reps, kClosedFormTol));

    // Two frame routes that share no machinery: direct nested quadrature vs
    // frames of the synthesized curve model.
    const CurveSynthesizer engine(ex.natural,
                                  uniform_grid(ex.natural.s_lo, ex.natural.s_hi, 201), cfg);
    const CurveModel engine_model = engine.curve_model();
    Worst w_agree;
    for (int i = 0; i <= 20; ++i) {
        const double s = ex.natural.s_lo + len * static_cast<double>(i) / 20.0;
        const Frame direct = closed_form_frame(ex.natural, s, cfg);
        const Frame tabled = frenet_frame(engine_model, s);
        w_agree.update(s, 0.0, frame_distance(direct, tabled));
    }
    report.checks.push_back(make_check(p + "frame_route_agreement", w_agree, kAgreementTol));

    // Example 1 instantiates the general-helix family; the published family
    // expansion of its e1+e2 curve drifted from the frame sum in the y-term.
    if (ex.id == 1) {
        const double m = -2.0;
        Worst w_dev;
        for (int i = 0; i <= 100; ++i) {
            const double s = ex.natural.s_lo + len * static_cast<double>(i) / 100.0;
            const double M = engine.torsion_integral(s); // = m * \int kappa
            const double published = -std::cosh(M) / m + m * std::sinh(M);
            const double definition = -std::cosh(M) / m - std::sinh(M);
            w_dev.update(s, definition, published);
        }
        VerifyDiscrepancy d;
        d.name = p + "family_expansion_e1e2";
        d.note = "published spacelike general-helix e1+e2 expansion carries '+ m sinh' "
                 "in the y-term where the frame sum yields '- sinh'; measured on this "
                 "example's instance (m = -2)";
        d.max_deviation = std::max(w_dev.err, 0.0);
        report.discrepancies.push_back(std::move(d));
    }
}

} // namespace

bool VerifyReport::all_passed() const {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

VerifyReport run_verification(std::span<const int> example_ids,
                              const QuadratureConfig& cfg) {
    if (example_ids.empty())
        raise(Errc::InvalidArgument, "run_verification: no example ids given");
    VerifyReport report;
    for (int id : example_ids)
        verify_example(report, reference_example(id), cfg);
    return report;
}

std::vector<VerifyDiscrepancy> family_expansion_discrepancies() {
    std::vector<VerifyDiscrepancy> out;

    // Published circular-helix expansion with kappa0 = b, tau0 = a: the
    // integrand pair appears as a*sinh(b s) / a*cosh(b s), so recomputing the
    // curvature of the published curve returns |a| (the torsion constant)
    // instead of b.
    {
        const double a = 2.0, b = 1.0;
        VerifyDiscrepancy d;
        d.name = "families/circular_helix_constant_swap";
        d.note = "published circular-helix expansion swaps the two constants: "
                 "recomputing the curvature of the published curve returns the "
                 "torsion constant (evaluated at kappa0 = 1, tau0 = 2)";
        d.max_deviation = std::abs(std::abs(a) - b);
        out.push_back(std::move(d));
    }

    // The same table repeats the first-derivative row as the
    // second-derivative row; already its absolute coordinate is 1 where a
    // second derivative must have 0.
    {
        VerifyDiscrepancy d;
        d.name = "families/circular_helix_duplicated_derivative_row";
        d.note = "published circular-helix second-derivative row repeats the "
                 "first-derivative row; the absolute-coordinate entry alone is off by 1";
        d.max_deviation = 1.0;
        out.push_back(std::move(d));
    }
    return out;
}

void print_report(std::ostream& os, const VerifyReport& report) {
    char line[256];
    std::snprintf(line, sizeof line, "%-42s %15s %15s %11s %9s  %s",
                  "check", "expected", "computed", "abs_error", "tol", "status");
    os << line << '\n';
    int failed = 0;
    for (const auto& check : report.checks) {
        if (!check.pass) ++failed;
        std::snprintf(line, sizeof line, "%-42s %15.8e %15.8e %11.3e %9.1e  %s",
                      check.name.c_str(), check.expected, check.computed,
                      check.abs_error, check.tolerance, check.pass ? "PASS" : "FAIL");
        os << line << '\n';
    }
    if (!report.discrepancies.empty()) {
        os << "\nknown discrepancies (documented, non-failing):\n";
        for (const auto& d : report.discrepancies) {
            std::snprintf(line, sizeof line, "  - %-49s max deviation %.3e",
                          d.name.c_str(), d.max_deviation);
            os << line << '\n';
            os << "      " << d.note << '\n';
        }
    }
    std::snprintf(line, sizeof line,
                  "\n%zu checks, %zu passed, %d failed -> %s",
                  report.checks.size(), report.checks.size() - static_cast<size_t>(failed),
                  failed, failed == 0 ? "PASS" : "FAIL");
    os << line << '\n';
}

} // namespace pg
