#include <doctest.h>

#include <cmath>
#include <vector>

#include "pgcurve/errors.hpp"
#include "pgcurve/fixtures.hpp"
#include "pgcurve/natural.hpp"

using namespace pg;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a pg::Error");
    return Errc::InvalidArgument;
}

} // namespace

TEST_CASE("families wire into natural equations") {
    FamilySpec helix;
    helix.family = CurveFamily::GeneralHelix;
    helix.character = CausalCharacter::Spacelike;
    helix.m = -2.0;
    helix.kappa_fn = [](double s) { return 1.0 / s; };
    helix.s_lo = 1.0;
    helix.s_hi = 3.0;
    const NaturalEquations h = family_to_natural(helix);
    CHECK(h.kappa(2.0) == 0.5);
    CHECK(h.tau(2.0) == -1.0); // m * kappa
    CHECK(h.character == CausalCharacter::Spacelike);

    FamilySpec circular;
    circular.family = CurveFamily::CircularHelix;
    circular.character = CausalCharacter::Timelike;
    circular.kappa0 = 1.0;
    circular.tau0 = 2.0;
    circular.s_lo = 0.0;
    circular.s_hi = 2.0;
    const NaturalEquations c = family_to_natural(circular);
    CHECK(c.kappa(1.7) == 1.0);
    CHECK(c.tau(0.3) == 2.0);

    FamilySpec salkowski;
    salkowski.family = CurveFamily::Salkowski;
    salkowski.kappa0 = 1.0;
    salkowski.tau_fn = [](double s) { return -2.0 / s; };
    salkowski.s_lo = 1.0;
    salkowski.s_hi = 3.0;
    const NaturalEquations sk = family_to_natural(salkowski);
    CHECK(sk.kappa(2.5) == 1.0);
    CHECK(sk.tau(2.0) == -1.0);

    FamilySpec anti;
    anti.family = CurveFamily::AntiSalkowski;
    anti.kappa_fn = [](double s) { return std::exp(-s); };
    anti.tau0 = -2.0;
    anti.s_lo = -1.0;
    anti.s_hi = 1.0;
    const NaturalEquations as = family_to_natural(anti);
    CHECK(as.kappa(0.0) == 1.0);
    CHECK(as.tau(0.7) == -2.0);
}

TEST_CASE("family constraints are enforced") {
    FamilySpec spec;
    spec.s_lo = 0.0;
    spec.s_hi = 1.0;

    spec.family = CurveFamily::GeneralHelix;
    spec.m = 0.0;
    spec.kappa_fn = [](double) { return 1.0; };
    CHECK(code_of([&] { family_to_natural(spec); }) == Errc::InvalidFamilyParameter);
    spec.m = -2.0;
    spec.kappa_fn = nullptr;
    CHECK(code_of([&] { family_to_natural(spec); }) == Errc::InvalidFamilyParameter);

    spec.family = CurveFamily::CircularHelix;
    spec.kappa0 = 0.0;
    CHECK(code_of([&] { family_to_natural(spec); }) == Errc::InvalidFamilyParameter);
    spec.kappa0 = -1.0;
    CHECK(code_of([&] { family_to_natural(spec); }) == Errc::InvalidFamilyParameter);

    spec.family = CurveFamily::Salkowski;
    spec.kappa0 = 1.0;
    spec.tau_fn = nullptr;
    CHECK(code_of([&] { family_to_natural(spec); }) == Errc::InvalidFamilyParameter);

    spec.family = CurveFamily::AntiSalkowski;
    spec.kappa_fn = nullptr;
    CHECK(code_of([&] { family_to_natural(spec); }) == Errc::InvalidFamilyParameter);

    spec.family = CurveFamily::CircularHelix;
    spec.kappa0 = 1.0;
    spec.s_hi = spec.s_lo; // empty domain
    CHECK(code_of([&] { family_to_natural(spec); }) == Errc::InvalidArgument);
}

TEST_CASE("the round-trip fixture set covers four families twice") {
    const auto fixtures = family_fixtures();
    REQUIRE(fixtures.size() == 8);
    int spacelike = 0;
    for (const auto& fx : fixtures) {
        if (fx.spec.character == CausalCharacter::Spacelike) ++spacelike;
        CHECK_NOTHROW(family_to_natural(fx.spec));
    }
    CHECK(spacelike == 4);
}

TEST_CASE("zero torsion synthesizes the parabolic closed form") {
    // kappa = 3/4, tau = 0, spacelike: r(s) = (s, 0, 3 s^2 / 8).
    NaturalEquations neq;
    neq.kappa = [](double) { return 0.75; };
    neq.tau = [](double) { return 0.0; };
    neq.character = CausalCharacter::Spacelike;
    neq.s_lo = 0.0;
    neq.s_hi = 2.0;

    const auto grid = uniform_grid(0.0, 2.0, 41);
    const SampledCurve curve = synthesize(neq, grid);
    REQUIRE(curve.params.size() == grid.size());
    REQUIRE(curve.frames.size() == grid.size());
    CHECK(curve.points.front().x == 0.0);
    CHECK(curve.points.front().y == 0.0);
    CHECK(curve.points.front().z == 0.0);

    for (size_t i = 0; i < grid.size(); ++i) {
        const double s = grid[i];
        CHECK(curve.points[i].x == s);
        CHECK(std::abs(curve.points[i].y) <= 1e-9);
        CHECK(std::abs(curve.points[i].z - 0.375 * s * s) <= 1e-9);

        const Frame& f = curve.frames[i];
        CHECK(max_abs_component(f.e2 - Vec3{0.0, 0.0, 1.0}) <= 1e-12);
        CHECK(max_abs_component(f.e3 - Vec3{0.0, -1.0, 0.0}) <= 1e-12);
        CHECK(f.epsilon == -1);
        CHECK(f.kappa == 0.75);
        CHECK(f.tau == 0.0);
    }
}

TEST_CASE("constant invariants synthesize the hyperbolic closed form") {
    // kappa = 1, tau = 2, timelike:
    //   y = (cosh(2s) - 1) / 4,  z = sinh(2s) / 4 - s / 2.
    NaturalEquations neq;
    neq.kappa = [](double) { return 1.0; };
    neq.tau = [](double) { return 2.0; };
    neq.character = CausalCharacter::Timelike;
    neq.s_lo = 0.0;
    neq.s_hi = 1.0;

    const auto grid = uniform_grid(0.0, 1.0, 201);
    const CurveSynthesizer engine(neq, grid);

    for (double s : {0.1, 0.35, 0.5, 0.77, 1.0}) {
        const Vec3 p = engine.position(s);
        CHECK(std::abs(p.y - (std::cosh(2.0 * s) - 1.0) / 4.0) <= 1e-9);
        CHECK(std::abs(p.z - (std::sinh(2.0 * s) / 4.0 - s / 2.0)) <= 1e-9);

        const Frame f = engine.frame(s);
        CHECK(std::abs(engine.torsion_integral(s) - 2.0 * s) <= 1e-9);
        CHECK(max_abs_component(f.e2 - Vec3{0.0, std::cosh(2.0 * s), std::sinh(2.0 * s)}) <= 1e-9);
        CHECK(max_abs_component(f.e3 - Vec3{0.0, std::sinh(2.0 * s), std::cosh(2.0 * s)}) <= 1e-9);
        CHECK(max_abs_component(f.e1 - Vec3{1.0, std::sinh(2.0 * s) / 2.0,
                                            (std::cosh(2.0 * s) - 1.0) / 2.0}) <= 1e-9);
        CHECK(f.epsilon == 1);
    }
}

TEST_CASE("the synthesized curve model reproduces its own invariants") {
    NaturalEquations neq;
    neq.kappa = [](double) { return 1.0; };
    neq.tau = [](double) { return 2.0; };
    neq.character = CausalCharacter::Timelike;
    neq.s_lo = 0.0;
    neq.s_hi = 2.0;

    const CurveSynthesizer engine(neq, uniform_grid(0.0, 2.0, 201));
    const CurveModel model = engine.curve_model();
    for (double s : {0.2, 0.9, 1.5, 1.9}) {
        const Frame f = frenet_frame(model, s);
        CHECK(std::abs(f.kappa - 1.0) <= 1e-9);
        CHECK(std::abs(f.tau - 2.0) <= 1e-9);
        CHECK(f.epsilon == 1);
        CHECK(causal_character(f) == CausalCharacter::Timelike);
    }
}

TEST_CASE("torsion accumulates to its antiderivative") {
    // tau = -2/s integrates to -2 ln s from s = 1.
    NaturalEquations neq;
    neq.kappa = [](double) { return 1.0; };
    neq.tau = [](double s) { return -2.0 / s; };
    neq.character = CausalCharacter::Spacelike;
    neq.s_lo = 1.0;
    neq.s_hi = 3.0;

    const CurveSynthesizer engine(neq, uniform_grid(1.0, 3.0, 201));
    for (double s : {1.0, 1.5, 2.0, 2.71, 3.0}) {
        const double T = engine.torsion_integral(s);
        CHECK(std::abs(T - (-2.0 * std::log(s))) <= 1e-9);
        // cosh T + sinh T = exp T = s^-2 ties the frame functions together.
        CHECK(std::cosh(T) + std::sinh(T) ==
              doctest::Approx(1.0 / (s * s)).epsilon(1e-9));
    }
}

TEST_CASE("the two frame routes agree without sharing machinery") {
    NaturalEquations neq;
    neq.kappa = [](double) { return 1.0; };
    neq.tau = [](double s) { return -2.0 / s; };
    neq.character = CausalCharacter::Timelike;
    neq.s_lo = 1.0;
    neq.s_hi = 3.0;

    const CurveSynthesizer engine(neq, uniform_grid(1.0, 3.0, 201));
    for (double s : {1.0, 1.4, 2.0, 2.6, 3.0}) {
        const Frame direct = closed_form_frame(neq, s);
        const Frame tabled = engine.frame(s);
        CHECK(max_abs_component(direct.e1 - tabled.e1) <= 1e-6);
        CHECK(max_abs_component(direct.e2 - tabled.e2) <= 1e-6);
        CHECK(max_abs_component(direct.e3 - tabled.e3) <= 1e-6);
        CHECK(direct.epsilon == tabled.epsilon);
    }
}

TEST_CASE("interpolated samples reproduce the input invariants") {
    NaturalEquations neq;
    neq.kappa = [](double) { return 1.0; };
    neq.tau = [](double) { return 2.0; };
    neq.character = CausalCharacter::Timelike;
    neq.s_lo = 0.0;
    neq.s_hi = 2.0;

    const SampledCurve samples = synthesize(neq, uniform_grid(0.0, 2.0, 401));
    const CurveModel interp = sampled_interpolant(samples);
    for (double s : {0.5, 1.0, 1.37}) {
        const CurvatureTorsion ct = curvature_torsion(interp, s);
        CHECK(std::abs(ct.kappa - 1.0) <= 1e-4);
        CHECK(std::abs(ct.tau - 2.0) <= 1e-4);
    }
    for (size_t i = 0; i < samples.params.size(); ++i)
        CHECK(samples.points[i].x == samples.params[i]);
}

TEST_CASE("non-positive curvature is rejected at synthesis time") {
    NaturalEquations neq;
    neq.kappa = [](double s) { return 1.0 - s; }; // crosses zero at s = 1
    neq.tau = [](double) { return 0.0; };
    neq.character = CausalCharacter::Spacelike;
    neq.s_lo = 0.0;
    neq.s_hi = 2.0;
    const auto grid = uniform_grid(0.0, 2.0, 11);
    CHECK(code_of([&] { CurveSynthesizer(neq, grid); }) == Errc::NonPositiveCurvature);
    CHECK(code_of([&] { closed_form_frame(neq, 1.5); }) == Errc::NonPositiveCurvature);
}

TEST_CASE("a curvature pole inside the domain is caught as instability") {
    NaturalEquations neq;
    neq.kappa = [](double s) { return 1.0 / s; }; // infinite at s = 0
    neq.tau = [](double) { return 0.0; };
    neq.character = CausalCharacter::Spacelike;
    neq.s_lo = 0.0;
    neq.s_hi = 1.0;
    const auto grid = uniform_grid(0.0, 1.0, 11);
    CHECK(code_of([&] { CurveSynthesizer(neq, grid); }) == Errc::NumericallyUnstable);
}

TEST_CASE("synthesis validates grids and domains") {
    NaturalEquations neq;
    neq.kappa = [](double) { return 1.0; };
    neq.tau = [](double) { return 0.0; };
    neq.character = CausalCharacter::Spacelike;
    neq.s_lo = 0.0;
    neq.s_hi = 2.0;

    const std::vector<double> one_node = {1.0};
    CHECK(code_of([&] { CurveSynthesizer(neq, one_node); }) == Errc::InvalidArgument);

    const std::vector<double> not_increasing = {0.0, 1.0, 1.0, 2.0};
    CHECK(code_of([&] { CurveSynthesizer(neq, not_increasing); }) == Errc::InvalidArgument);

    const std::vector<double> outside = {0.0, 1.0, 2.5};
    CHECK(code_of([&] { CurveSynthesizer(neq, outside); }) == Errc::InvalidArgument);

    // A microscopic output cell would demand an impossible table.
    const std::vector<double> too_fine = {0.0, 1e-7, 2.0};
    CHECK(code_of([&] { CurveSynthesizer(neq, too_fine); }) == Errc::InvalidArgument);

    const CurveSynthesizer engine(neq, uniform_grid(0.0, 2.0, 5));
    CHECK(code_of([&] { engine.position(3.0); }) == Errc::OutOfDomain);
    CHECK(code_of([&] { engine.frame(-0.5); }) == Errc::OutOfDomain);
    CHECK(engine.equations().s_hi == 2.0);
}

TEST_CASE("interpolation rejects inconsistent sample sets") {
    SampledCurve samples;
    samples.params = {0.0, 1.0};
    samples.points = {{0.0, 0.0, 0.0}};
    CHECK(code_of([&] { sampled_interpolant(samples); }) == Errc::InvalidArgument);

    samples.points.push_back({1.0, 0.0, 0.0});
    CHECK(code_of([&] { sampled_interpolant(samples); }) == Errc::InvalidArgument); // < 8

    samples.params = uniform_grid(0.0, 2.0, 9);
    samples.points.clear();
    for (double s : samples.params)
        samples.points.push_back({s, s * s, 0.5 * s});
    samples.points[4].x += 0.5; // not arc-length data any more
    CHECK(code_of([&] { sampled_interpolant(samples); }) == Errc::InvalidArgument);
}
