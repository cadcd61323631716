#pragma once

#include <stdexcept>
#include <string>

namespace pg {

// Every failure surfaced by the library carries one of these codes so callers
// (in particular the command-line driver) can map faults to exit statuses
// without string matching.
enum class Errc {
    InvalidArgument,       // malformed input: bad grid, bad config, non-finite data
    OutOfDomain,           // parameter outside the curve/equation domain
    NumericallyUnstable,   // stencil exits domain, non-finite intermediate, ...
    DegenerateCurvature,   // curvature vanishes (or tangent is isotropic)
    LightlikeNormal,       // normal projection is lightlike; frame undefined
    ZeroNormCombination,   // frame-vector sum has zero norm, cannot normalize
    ToleranceNotReached,   // adaptive quadrature ran out of refinement depth
    NonPositiveCurvature,  // natural equations with kappa <= 0 at a node
    InvalidFamilyParameter // family parameters violate their constraints
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what_arg)
        : std::runtime_error(std::string(to_string(code)) + ": " + what_arg),
          code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline const char* to_string(Errc code) {
    switch (code) {
    case Errc::InvalidArgument:        return "invalid argument";
    case Errc::OutOfDomain:            return "out of domain";
    case Errc::NumericallyUnstable:    return "numerically unstable";
    case Errc::DegenerateCurvature:    return "degenerate curvature";
    case Errc::LightlikeNormal:        return "lightlike normal";
    case Errc::ZeroNormCombination:    return "zero-norm combination";
    case Errc::ToleranceNotReached:    return "tolerance not reached";
    case Errc::NonPositiveCurvature:   return "non-positive curvature";
    case Errc::InvalidFamilyParameter: return "invalid family parameter";
    }
    return "unknown error";
}

[[noreturn]] inline void raise(Errc code, const std::string& what_arg) {
    throw Error(code, what_arg);
}

} // namespace pg
