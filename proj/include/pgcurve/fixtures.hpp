#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pgcurve/natural.hpp"
#include "pgcurve/smarandache.hpp"

// Built-in reference curves with closed-form invariants.
//
// Five classical admissible curves (a spacelike/timelike general-helix pair,
// a spacelike/timelike constant-torsion pair and a planar spiral) ship with
// the library, each carrying analytic derivatives, closed-form curvature,
// torsion and frame fields, the natural equations they solve, and the
// Smarandache combinations in closed form.  They drive the verification
// command and most oracle tests.
//
// For two of the spiral's published Smarandache rows the expected values in
// circulation disagree with the definition (the e1+e2 row reproduces e1+e3,
// and the e1+e3 row reproduces e1+e2+e3).  Those rows are retained verbatim
// so the verifier can measure and report the discrepancy instead of silently
// correcting it.

namespace pg {

struct ReferenceExample {
    int id = 0;                    // 1..5
    std::string name;
    CurveModel curve;              // analytic derivative maps, orders 1..3
    double window_lo = 0.0;        // verification window inside the domain
    double window_hi = 0.0;

    std::function<double(double)> kappa_ref;
    std::function<double(double)> tau_ref;
    std::function<Vec3(double)> e1_ref, e2_ref, e3_ref;
    int epsilon_ref = 0;
    CausalCharacter character_ref = CausalCharacter::Spacelike;

    NaturalEquations natural;      // the equations this curve solves

    // Expected Smarandache rows as published alongside the curve.
    std::function<Vec3(double)> expected_e1e2, expected_e1e3, expected_e1e2e3;
    // Which expected rows actually agree with the definition-route values.
    bool e1e2_row_consistent = true;
    bool e1e3_row_consistent = true;
    bool e1e2e3_row_consistent = true;
};

const std::vector<ReferenceExample>& reference_examples();

const ReferenceExample& reference_example(int id); // throws InvalidArgument

// Family instances used by the synthesis round-trip suite: each of the four
// families, both causal characters.
struct FamilyFixture {
    std::string name;
    FamilySpec spec;
};

std::vector<FamilyFixture> family_fixtures();

} // namespace pg
