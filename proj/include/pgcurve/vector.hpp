#pragma once

#include <cmath>
#include <cstdlib>
#include <algorithm>

#include "pgcurve/errors.hpp"

// Vector algebra of the three-dimensional pseudo-Galilean space.
//
// Coordinates are written (x, y, z) where x is the absolute coordinate.  The
// scalar product is degenerate and rank-sensitive:
//
//     <u, v> = u.x * v.x                    if u.x != 0 or v.x != 0,
//     <u, v> = u.y * v.y - u.z * v.z        if u.x  = 0 and v.x  = 0.
//
// A vector with vanishing absolute coordinate is called isotropic; the
// restriction of the product to the isotropic plane is Lorentzian, which is
// what makes spacelike / timelike / lightlike distinctions appear there.

namespace pg {

// Absolute tolerance used when deciding whether a component (or the isotropic
// quadratic form) is zero.  Exact frame arithmetic cancels to 0.0 bitwise, so
// anything at this scale is numerical noise, not geometry.
inline constexpr double kZeroComponentTol = 1e-12;

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};
};

enum class VectorClass {
    NonIsotropic,      // x != 0
    SpacelikeIsotropic, // x = 0, y^2 - z^2 > 0
    TimelikeIsotropic,  // x = 0, y^2 - z^2 < 0
    Lightlike,          // x = 0, y = +-z, v != 0
    Zero
};

inline const char* to_string(VectorClass c) {
    switch (c) {
    case VectorClass::NonIsotropic:       return "non-isotropic";
    case VectorClass::SpacelikeIsotropic: return "spacelike";
    case VectorClass::TimelikeIsotropic:  return "timelike";
    case VectorClass::Lightlike:          return "lightlike";
    case VectorClass::Zero:               return "zero";
    }
    return "unknown";
}

inline bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

inline void require_finite(const Vec3& v, const char* who) {
    if (!finite(v)) raise(Errc::InvalidArgument, std::string(who) + ": non-finite component");
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator*(const Vec3& v, double s) { return s * v; }
inline Vec3 operator/(const Vec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }

inline double max_abs_component(const Vec3& v) {
    return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

// Degenerate scalar product.  The first rule applies as soon as either vector
// has a nonzero absolute coordinate (zero decided against kZeroComponentTol).
inline double dot(const Vec3& u, const Vec3& v) {
    require_finite(u, "dot");
    require_finite(v, "dot");
    if (std::abs(u.x) > kZeroComponentTol || std::abs(v.x) > kZeroComponentTol)
        return u.x * v.x;
    return u.y * v.y - u.z * v.z;
}

// The squared product can be negative on the isotropic plane; the norm takes
// the square root of its magnitude.  Lightlike vectors therefore have norm 0.
inline double norm(const Vec3& v) {
    return std::sqrt(std::abs(dot(v, v)));
}

// Cross product adapted to the degenerate metric: the result always lies in
// the isotropic plane (first component identically zero).
inline Vec3 cross(const Vec3& u, const Vec3& v) {
    require_finite(u, "cross");
    require_finite(v, "cross");
    return {0.0,
            u.x * v.z - u.z * v.x,
            u.x * v.y - u.y * v.x};
}

inline VectorClass classify(const Vec3& v) {
    require_finite(v, "classify");
    if (std::abs(v.x) > kZeroComponentTol) return VectorClass::NonIsotropic;
    if (std::abs(v.y) <= kZeroComponentTol && std::abs(v.z) <= kZeroComponentTol)
        return VectorClass::Zero;
    const double q = v.y * v.y - v.z * v.z;
    // Scale-aware zero test: for large isotropic vectors the rounding noise of
    // y^2 - z^2 grows with the squares themselves.
    const double tol = kZeroComponentTol * std::max({1.0, v.y * v.y, v.z * v.z});
    if (q > tol) return VectorClass::SpacelikeIsotropic;
    if (q < -tol) return VectorClass::TimelikeIsotropic;
    return VectorClass::Lightlike;
}

} // namespace pg
