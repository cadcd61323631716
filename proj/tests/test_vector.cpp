#include <doctest.h>

#include <cmath>
#include <random>

#include "pgcurve/vector.hpp"

using namespace pg;

TEST_CASE("degenerate scalar product follows the rank rule") {
    // Either x nonzero: only the absolute coordinates interact.
    CHECK(dot({2.0, 5.0, 7.0}, {3.0, -1.0, 4.0}) == 6.0);
    CHECK(dot({2.0, 5.0, 7.0}, {0.0, -1.0, 4.0}) == 0.0);
    CHECK(dot({0.0, 5.0, 7.0}, {3.0, -1.0, 4.0}) == 0.0);
    // Both isotropic: Lorentzian product on the (y, z) plane.
    CHECK(dot({0.0, 2.0, 1.0}, {0.0, 3.0, 1.0}) == 5.0);
    CHECK(dot({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}) == -3.0);
    CHECK(dot({0.0, 1.0, 1.0}, {0.0, 1.0, 1.0}) == 0.0);
}

TEST_CASE("norm is the square root of the product magnitude") {
    CHECK(norm({2.0, 5.0, 7.0}) == 2.0);
    CHECK(norm({-3.0, 0.0, 0.0}) == 3.0);
    CHECK(norm({0.0, 3.0, 1.0}) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
    CHECK(norm({0.0, 1.0, 2.0}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(norm({0.0, 1.0, 1.0}) == 0.0);  // lightlike
    CHECK(norm({0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("cross product lands in the isotropic plane") {
    const Vec3 c = cross({1.0, 0.0, 0.0}, {0.0, 1.0, 2.0});
    CHECK(c.x == 0.0);
    CHECK(c.y == 2.0);
    CHECK(c.z == 1.0);

    const Vec3 d = cross({1.0, 2.0, 3.0}, {4.0, 5.0, 6.0});
    CHECK(d.x == 0.0);
    CHECK(d.y == 1.0 * 6.0 - 3.0 * 4.0);
    CHECK(d.z == 1.0 * 5.0 - 2.0 * 4.0);

    // Parallel vectors annihilate.
    const Vec3 e = cross({2.0, 4.0, 6.0}, {1.0, 2.0, 3.0});
    CHECK(max_abs_component(e) == 0.0);
}

TEST_CASE("classification covers every regime") {
    CHECK(classify({1.0, 2.0, 3.0}) == VectorClass::NonIsotropic);
    CHECK(classify({-1e-3, 0.0, 0.0}) == VectorClass::NonIsotropic);
    CHECK(classify({0.0, 2.0, 1.0}) == VectorClass::SpacelikeIsotropic);
    CHECK(classify({0.0, 1.0, 2.0}) == VectorClass::TimelikeIsotropic);
    CHECK(classify({0.0, 1.0, 1.0}) == VectorClass::Lightlike);
    CHECK(classify({0.0, -1.0, 1.0}) == VectorClass::Lightlike);
    CHECK(classify({0.0, 0.0, 0.0}) == VectorClass::Zero);
    // Components at rounding scale count as zero.
    CHECK(classify({0.0, 1e-13, -1e-13}) == VectorClass::Zero);
    CHECK(classify({1e-13, 3.0, 1.0}) == VectorClass::SpacelikeIsotropic);
}

TEST_CASE("lightlike test scales with the component magnitude") {
    // y^2 - z^2 here is ~1e7, far above the absolute tolerance, but only a
    // few ulps of y^2 itself -- still lightlike.
    const double big = 1e8;
    CHECK(classify({0.0, big, std::nextafter(big, 2.0 * big)}) == VectorClass::Lightlike);
    // A genuinely different pair of large components is not.
    CHECK(classify({0.0, big, 0.9 * big}) == VectorClass::SpacelikeIsotropic);
}

TEST_CASE("vector names match the CLI vocabulary") {
    CHECK(std::string(to_string(VectorClass::NonIsotropic)) == "non-isotropic");
    CHECK(std::string(to_string(VectorClass::SpacelikeIsotropic)) == "spacelike");
    CHECK(std::string(to_string(VectorClass::TimelikeIsotropic)) == "timelike");
    CHECK(std::string(to_string(VectorClass::Lightlike)) == "lightlike");
    CHECK(std::string(to_string(VectorClass::Zero)) == "zero");
}

TEST_CASE("non-finite components are rejected") {
    const double nan = std::nan("");
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(dot({nan, 0.0, 0.0}, {1.0, 0.0, 0.0}), Error);
    CHECK_THROWS_AS(cross({1.0, inf, 0.0}, {1.0, 0.0, 0.0}), Error);
    CHECK_THROWS_AS(classify({0.0, 0.0, nan}), Error);
    try {
        classify({inf, 0.0, 0.0});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidArgument);
    }
}

TEST_CASE("randomized product and classification properties") {
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    const auto rand_vec = [&]() { return Vec3{coef(rng), coef(rng), coef(rng)}; };
    const auto rand_iso = [&]() { return Vec3{0.0, coef(rng), coef(rng)}; };

    for (int trial = 0; trial < 500; ++trial) {
        const Vec3 u = rand_vec();
        const Vec3 v = rand_vec();

        // Symmetry and bilinearity in the first slot.
        CHECK(dot(u, v) == dot(v, u));
        const double a = coef(rng);
        CHECK(dot(a * u, v) == doctest::Approx(a * dot(u, v)).epsilon(1e-12));

        // Cross: antisymmetric, isotropic, and metric-orthogonal to both
        // arguments when at least one argument is isotropic in x.
        const Vec3 c = cross(u, v);
        const Vec3 cr = cross(v, u);
        CHECK(c.x == 0.0);
        CHECK(max_abs_component(c + cr) == 0.0);

        const Vec3 w = rand_iso();
        const Vec3 cw = cross(u, w);
        // <cross(u, w), w> = (u.x w.z) w.y - (u.x w.y) w.z = 0 exactly in
        // real arithmetic; allow rounding here.
        CHECK(std::abs(dot(cw, w)) <= 1e-12 * (1.0 + max_abs_component(u) *
                                                      max_abs_component(w) *
                                                      max_abs_component(w)));
    }

    for (int trial = 0; trial < 500; ++trial) {
        const Vec3 v = trial % 2 == 0 ? rand_vec() : rand_iso();
        const VectorClass cls = classify(v);

        // Exactly one class, and it matches the sign structure.
        if (std::abs(v.x) > kZeroComponentTol) {
            CHECK(cls == VectorClass::NonIsotropic);
        } else {
            const double q = v.y * v.y - v.z * v.z;
            if (cls == VectorClass::SpacelikeIsotropic) CHECK(q > 0.0);
            if (cls == VectorClass::TimelikeIsotropic) CHECK(q < 0.0);
        }

        // Norm vanishes exactly for lightlike and zero vectors.
        if (cls == VectorClass::Lightlike || cls == VectorClass::Zero) {
            CHECK(norm(v) <= 1e-6 * std::max(1.0, max_abs_component(v)));
        } else {
            CHECK(norm(v) > 0.0);
        }
    }
}
