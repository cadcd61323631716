#include "pgcurve/fixtures.hpp"

#include <cmath>

#include "pgcurve/errors.hpp"

namespace pg {

namespace {

// Example 1: spacelike general helix with kappa = 1/u, tau = -2/u.
//   alpha(u) = (u, (u/6)(-cosh(2 ln u) + 2 sinh(2 ln u)),
//                  (u/6)(2 cosh(2 ln u) - sinh(2 ln u)))
ReferenceExample make_example1() {
    ReferenceExample ex;
    ex.id = 1;
    ex.name = "spacelike general helix";
    ex.curve.s_lo = 0.1;
    ex.curve.s_hi = 10.0;
    ex.curve.kind = Parametrization::ArcLength;
    ex.curve.position = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{u, u / 6.0 * (-std::cosh(w) + 2.0 * std::sinh(w)),
                    u / 6.0 * (2.0 * std::cosh(w) - std::sinh(w))};
    };
    ex.curve.derivative[0] = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{1.0, 0.5 * std::cosh(w), 0.5 * std::sinh(w)};
    };
    ex.curve.derivative[1] = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{0.0, std::sinh(w) / u, std::cosh(w) / u};
    };
    ex.curve.derivative[2] = [](double u) {
        const double w = 2.0 * std::log(u);
        const double u2 = u * u;
        return Vec3{0.0, (2.0 * std::cosh(w) - std::sinh(w)) / u2,
                    (2.0 * std::sinh(w) - std::cosh(w)) / u2};
    };
    ex.window_lo = 0.5;
    ex.window_hi = 3.0;
    ex.kappa_ref = [](double u) { return 1.0 / u; };
    ex.tau_ref = [](double u) { return -2.0 / u; };
    ex.e1_ref = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{1.0, 0.5 * std::cosh(w), 0.5 * std::sinh(w)};
    };
    ex.e2_ref = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{0.0, std::sinh(w), std::cosh(w)};
    };
    ex.e3_ref = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{0.0, -std::cosh(w), -std::sinh(w)};
    };
    ex.epsilon_ref = -1;
    ex.character_ref = CausalCharacter::Spacelike;
    ex.natural = {[](double s) { return 1.0 / s; },
                  [](double s) { return -2.0 / s; },
                  CausalCharacter::Spacelike, 0.5, 3.0};
    ex.expected_e1e2 = [](double u) {
        const double w = 2.0 * std::log(u);
        const double u2 = u * u;
        return Vec3{1.0, 0.5 * std::cosh(w) + std::sinh(w),
                    (1.0 + 3.0 * u2 * u2) / (4.0 * u2)};
    };
    ex.expected_e1e3 = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{1.0, -0.5 * std::cosh(w), -0.5 * std::sinh(w)};
    };
    ex.expected_e1e2e3 = [](double u) {
        const double u2 = u * u;
        return Vec3{1.0, (-3.0 + u2 * u2) / (4.0 * u2), (3.0 + u2 * u2) / (4.0 * u2)};
    };
    return ex;
}

// Example 2: timelike general helix (the y/z swap of example 1), tau = +2/u.
ReferenceExample make_example2() {
    ReferenceExample ex;
    ex.id = 2;
    ex.name = "timelike general helix";
    ex.curve.s_lo = 0.1;
    ex.curve.s_hi = 10.0;
    ex.curve.kind = Parametrization::ArcLength;
    ex.curve.position = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{u, u / 6.0 * (2.0 * std::cosh(w) - std::sinh(w)),
                    u / 6.0 * (-std::cosh(w) + 2.0 * std::sinh(w))};
    };
    ex.curve.derivative[0] = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{1.0, 0.5 * std::sinh(w), 0.5 * std::cosh(w)};
    };
    ex.curve.derivative[1] = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{0.0, std::cosh(w) / u, std::sinh(w) / u};
    };
    ex.curve.derivative[2] = [](double u) {
        const double w = 2.0 * std::log(u);
        const double u2 = u * u;
        return Vec3{0.0, (2.0 * std::sinh(w) - std::cosh(w)) / u2,
                    (2.0 * std::cosh(w) - std::sinh(w)) / u2};
    };
    ex.window_lo = 0.5;
    ex.window_hi = 3.0;
    ex.kappa_ref = [](double u) { return 1.0 / u; };
    ex.tau_ref = [](double u) { return 2.0 / u; };
    ex.e1_ref = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{1.0, 0.5 * std::sinh(w), 0.5 * std::cosh(w)};
    };
    ex.e2_ref = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{0.0, std::cosh(w), std::sinh(w)};
    };
    ex.e3_ref = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{0.0, std::sinh(w), std::cosh(w)};
    };
    ex.epsilon_ref = 1;
    ex.character_ref = CausalCharacter::Timelike;
    ex.natural = {[](double s) { return 1.0 / s; },
                  [](double s) { return 2.0 / s; },
                  CausalCharacter::Timelike, 0.5, 3.0};
    ex.expected_e1e2 = [](double u) {
        const double w = 2.0 * std::log(u);
        const double u2 = u * u;
        return Vec3{1.0, (1.0 + 3.0 * u2 * u2) / (4.0 * u2),
                    0.5 * std::cosh(w) + std::sinh(w)};
    };
    ex.expected_e1e3 = [](double u) {
        const double w = 2.0 * std::log(u);
        return Vec3{1.0, 1.5 * std::sinh(w), 1.5 * std::cosh(w)};
    };
    ex.expected_e1e2e3 = [](double u) {
        const double w = 2.0 * std::log(u);
        const double u2 = u * u;
        return Vec3{1.0, std::cosh(w) + 1.5 * std::sinh(w),
                    (1.0 + 5.0 * u2 * u2) / (4.0 * u2)};
    };
    return ex;
}

// Example 3: spacelike curve with kappa = e^{-u} and constant torsion -2
// (anti-Salkowski): delta(u) = (u, e^u/2 - e^{-3u}/18, e^u/2 + e^{-3u}/18).
ReferenceExample make_example3() {
    ReferenceExample ex;
    ex.id = 3;
    ex.name = "spacelike anti-salkowski";
    ex.curve.s_lo = -2.0;
    ex.curve.s_hi = 2.0;
    ex.curve.kind = Parametrization::ArcLength;
    ex.curve.position = [](double u) {
        return Vec3{u, std::exp(u) / 2.0 - std::exp(-3.0 * u) / 18.0,
                    std::exp(u) / 2.0 + std::exp(-3.0 * u) / 18.0};
    };
    ex.curve.derivative[0] = [](double u) {
        return Vec3{1.0, (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0,
                    -std::exp(-3.0 * u) / 6.0 + std::exp(u) / 2.0};
    };
    ex.curve.derivative[1] = [](double u) {
        return Vec3{0.0, std::exp(-u) * std::sinh(2.0 * u),
                    std::exp(-u) * std::cosh(2.0 * u)};
    };
    ex.curve.derivative[2] = [](double u) {
        return Vec3{0.0, (3.0 * std::exp(-3.0 * u) + std::exp(u)) / 2.0,
                    (-3.0 * std::exp(-3.0 * u) + std::exp(u)) / 2.0};
    };
    ex.window_lo = -1.0;
    ex.window_hi = 1.0;
    ex.kappa_ref = [](double u) { return std::exp(-u); };
    ex.tau_ref = [](double) { return -2.0; };
    ex.e1_ref = [](double u) {
        return Vec3{1.0, (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0,
                    -std::exp(-3.0 * u) / 6.0 + std::exp(u) / 2.0};
    };
    ex.e2_ref = [](double u) { return Vec3{0.0, std::sinh(2.0 * u), std::cosh(2.0 * u)}; };
    ex.e3_ref = [](double u) { return Vec3{0.0, -std::cosh(2.0 * u), -std::sinh(2.0 * u)}; };
    ex.epsilon_ref = -1;
    ex.character_ref = CausalCharacter::Spacelike;
    ex.natural = {[](double s) { return std::exp(-s); },
                  [](double) { return -2.0; },
                  CausalCharacter::Spacelike, -1.0, 1.0};
    ex.expected_e1e2 = [](double u) {
        return Vec3{1.0, (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0 + std::sinh(2.0 * u),
                    (-std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0 + std::cosh(2.0 * u)};
    };
    ex.expected_e1e3 = [](double u) {
        return Vec3{1.0, (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0 - std::cosh(2.0 * u),
                    (-std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0 - std::sinh(2.0 * u)};
    };
    ex.expected_e1e2e3 = [](double u) {
        // (1/6) e^{-3u} (1 - 6 e^u + 3 e^{4u}) and (1/6) e^{-3u} (-1 + 6 e^u + 3 e^{4u})
        const double e3u = std::exp(-3.0 * u);
        const double eu = std::exp(u);
        const double e4u = std::exp(4.0 * u);
        return Vec3{1.0, e3u / 6.0 * (1.0 - 6.0 * eu + 3.0 * e4u),
                    e3u / 6.0 * (-1.0 + 6.0 * eu + 3.0 * e4u)};
    };
    return ex;
}

// Example 4: timelike anti-Salkowski (the y/z swap of example 3), tau = +2.
ReferenceExample make_example4() {
    ReferenceExample ex;
    ex.id = 4;
    ex.name = "timelike anti-salkowski";
    ex.curve.s_lo = -2.0;
    ex.curve.s_hi = 2.0;
    ex.curve.kind = Parametrization::ArcLength;
    ex.curve.position = [](double u) {
        return Vec3{u, std::exp(u) / 2.0 + std::exp(-3.0 * u) / 18.0,
                    std::exp(u) / 2.0 - std::exp(-3.0 * u) / 18.0};
    };
    ex.curve.derivative[0] = [](double u) {
        return Vec3{1.0, std::exp(u) / 2.0 - std::exp(-3.0 * u) / 6.0,
                    (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0};
    };
    ex.curve.derivative[1] = [](double u) {
        return Vec3{0.0, std::exp(-u) * std::cosh(2.0 * u),
                    std::exp(-u) * std::sinh(2.0 * u)};
    };
    ex.curve.derivative[2] = [](double u) {
        return Vec3{0.0, (-3.0 * std::exp(-3.0 * u) + std::exp(u)) / 2.0,
                    (3.0 * std::exp(-3.0 * u) + std::exp(u)) / 2.0};
    };
    ex.window_lo = -1.0;
    ex.window_hi = 1.0;
    ex.kappa_ref = [](double u) { return std::exp(-u); };
    ex.tau_ref = [](double) { return 2.0; };
    ex.e1_ref = [](double u) {
        return Vec3{1.0, std::exp(u) / 2.0 - std::exp(-3.0 * u) / 6.0,
                    (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0};
    };
    ex.e2_ref = [](double u) { return Vec3{0.0, std::cosh(2.0 * u), std::sinh(2.0 * u)}; };
    ex.e3_ref = [](double u) { return Vec3{0.0, std::sinh(2.0 * u), std::cosh(2.0 * u)}; };
    ex.epsilon_ref = 1;
    ex.character_ref = CausalCharacter::Timelike;
    ex.natural = {[](double s) { return std::exp(-s); },
                  [](double) { return 2.0; },
                  CausalCharacter::Timelike, -1.0, 1.0};
    ex.expected_e1e2 = [](double u) {
        return Vec3{1.0,
                    std::exp(u) / 2.0 - std::exp(-3.0 * u) / 6.0 + std::cosh(2.0 * u),
                    (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0 + std::sinh(2.0 * u)};
    };
    ex.expected_e1e3 = [](double u) {
        return Vec3{1.0,
                    std::exp(u) / 2.0 - std::exp(-3.0 * u) / 6.0 + std::sinh(2.0 * u),
                    (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0 + std::cosh(2.0 * u)};
    };
    ex.expected_e1e2e3 = [](double u) {
        const double e2u = std::exp(2.0 * u);
        return Vec3{1.0, std::exp(u) / 2.0 - std::exp(-3.0 * u) / 6.0 + e2u,
                    (std::exp(-3.0 * u) + 3.0 * std::exp(u)) / 6.0 + e2u};
    };
    return ex;
}

// Example 5: timelike planar spiral with kappa = 1/(2+u), tau = 0:
//   eta(u) = (u, (2+u)(-1 + ln(2+u)), 0).
// The published e1+e2 row reproduces e1+e3 and the published e1+e3 row
// reproduces e1+e2+e3; both rows are kept verbatim and flagged inconsistent.
ReferenceExample make_example5() {
    ReferenceExample ex;
    ex.id = 5;
    ex.name = "timelike planar spiral";
    ex.curve.s_lo = -1.5;
    ex.curve.s_hi = 5.0;
    ex.curve.kind = Parametrization::ArcLength;
    ex.curve.position = [](double u) {
        return Vec3{u, (2.0 + u) * (-1.0 + std::log(2.0 + u)), 0.0};
    };
    ex.curve.derivative[0] = [](double u) { return Vec3{1.0, std::log(2.0 + u), 0.0}; };
    ex.curve.derivative[1] = [](double u) { return Vec3{0.0, 1.0 / (2.0 + u), 0.0}; };
    ex.curve.derivative[2] = [](double u) {
        return Vec3{0.0, -1.0 / ((2.0 + u) * (2.0 + u)), 0.0};
    };
    ex.window_lo = -1.0;
    ex.window_hi = 2.0;
    ex.kappa_ref = [](double u) { return 1.0 / (2.0 + u); };
    ex.tau_ref = [](double) { return 0.0; };
    ex.e1_ref = [](double u) { return Vec3{1.0, std::log(2.0 + u), 0.0}; };
    ex.e2_ref = [](double) { return Vec3{0.0, 1.0, 0.0}; };
    ex.e3_ref = [](double) { return Vec3{0.0, 0.0, 1.0}; };
    ex.epsilon_ref = 1;
    ex.character_ref = CausalCharacter::Timelike;
    ex.natural = {[](double s) { return 1.0 / (2.0 + s); },
                  [](double) { return 0.0; },
                  CausalCharacter::Timelike, -1.0, 2.0};
    ex.expected_e1e2 = [](double u) { return Vec3{1.0, std::log(2.0 + u), 1.0}; };
    ex.expected_e1e3 = [](double u) { return Vec3{1.0, 1.0 + std::log(2.0 + u), 1.0}; };
    ex.expected_e1e2e3 = [](double u) { return Vec3{1.0, 1.0 + std::log(2.0 + u), 1.0}; };
    ex.e1e2_row_consistent = false;
    ex.e1e3_row_consistent = false;
    ex.e1e2e3_row_consistent = true;
    return ex;
}

} // namespace

const std::vector<ReferenceExample>& reference_examples() {
    static const std::vector<ReferenceExample> examples = {
        make_example1(), make_example2(), make_example3(), make_example4(), make_example5()};
    return examples;
}

const ReferenceExample& reference_example(int id) {
    for (const auto& ex : reference_examples())
        if (ex.id == id) return ex;
    raise(Errc::InvalidArgument,
          "reference_example: id must be 1..5, got " + std::to_string(id));
}

std::vector<FamilyFixture> family_fixtures() {
    std::vector<FamilyFixture> out;
    const auto inv = [](double s) { return 1.0 / s; };
    const auto neg2_inv = [](double s) { return -2.0 / s; };
    const auto exp_neg = [](double s) { return std::exp(-s); };

    for (CausalCharacter ch : {CausalCharacter::Spacelike, CausalCharacter::Timelike}) {
        const std::string suffix = std::string(" (") + to_string(ch) + ")";

        FamilySpec helix;
        helix.family = CurveFamily::GeneralHelix;
        helix.character = ch;
        helix.m = -2.0;
        helix.kappa_fn = inv;
        helix.s_lo = 1.0;
        helix.s_hi = 3.0;
        out.push_back({"general helix m=-2, kappa=1/s" + suffix, helix});

        FamilySpec circular;
        circular.family = CurveFamily::CircularHelix;
        circular.character = ch;
        circular.kappa0 = 1.0;
        circular.tau0 = 2.0;
        circular.s_lo = 0.0;
        circular.s_hi = 2.0;
        out.push_back({"circular helix kappa=1, tau=2" + suffix, circular});

        FamilySpec salkowski;
        salkowski.family = CurveFamily::Salkowski;
        salkowski.character = ch;
        salkowski.kappa0 = 1.0;
        salkowski.tau_fn = neg2_inv;
        salkowski.s_lo = 1.0;
        salkowski.s_hi = 3.0;
        out.push_back({"salkowski kappa=1, tau=-2/s" + suffix, salkowski});

        FamilySpec anti;
        anti.family = CurveFamily::AntiSalkowski;
        anti.character = ch;
        anti.kappa_fn = exp_neg;
        anti.tau0 = -2.0;
        anti.s_lo = -1.0;
        anti.s_hi = 1.0;
        out.push_back({"anti-salkowski kappa=exp(-s), tau=-2" + suffix, anti});
    }
    return out;
}

} // namespace pg
