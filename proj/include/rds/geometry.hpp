// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace rds {

inline constexpr double kTwoPi = 6.28318530717958647692;

/// Point in the planar state space.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Angle/radius pair. The angle unit (radians vs. turns) is the caller's
/// convention; each flow documents which one it uses.
struct PolarPoint {
    double alpha = 0.0;
    double rho = 0.0;
};

/// Reduce an angle in radians to [0, 2*pi), clamping boundary spill.
inline double wrap_radians(double a) {
    double r = a - kTwoPi * std::floor(a / kTwoPi);
    if (r >= kTwoPi) r -= kTwoPi;
    if (r < 0.0) r = 0.0;
    return r;
}

/// Reduce an angle in turns to [0, 1), clamping boundary spill.
inline double wrap_unit(double a) {
    double r = a - std::floor(a);
    if (r >= 1.0) r -= 1.0;
    if (r < 0.0) r = 0.0;
    return r;
}

inline PolarPoint to_polar_radians(Vec2 p) {
    return {wrap_radians(std::atan2(p.y, p.x)), p.norm()};
}

inline Vec2 from_polar_radians(PolarPoint p) {
    return {p.rho * std::cos(p.alpha), p.rho * std::sin(p.alpha)};
}

inline PolarPoint to_polar_turns(Vec2 p) {
    return {wrap_unit(std::atan2(p.y, p.x) / kTwoPi), p.norm()};
}

inline Vec2 from_polar_turns(PolarPoint p) {
    return {p.rho * std::cos(kTwoPi * p.alpha), p.rho * std::sin(kTwoPi * p.alpha)};
}

inline Vec2 rotate(Vec2 p, double radians) {
    const double c = std::cos(radians);
    const double s = std::sin(radians);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace rds
