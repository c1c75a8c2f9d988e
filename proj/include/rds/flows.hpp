// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rds/flow.hpp"
#include "rds/radial_profile.hpp"

namespace rds {

/// Noise-driven planar flow with decoupled polar dynamics: the radius is
/// transported rigidly along the profile F (log F advances linearly,
/// log F(rho_t) = t + log F(rho_0), with 0 and 1 fixed), and the angle is
/// advanced by the noise increment, alpha_t = alpha_0 + w(t) - w(0),
/// reduced mod 2*pi. The radius never crosses the unit circle: each branch
/// of F is invariant. Driving paths are meant to be smooth (the periodic
/// ensembles); no period tag is required.
class RandomOdeFlow final : public FlowMap {
public:
    Vec2 evaluate(double t, const SamplePath& omega, const Vec2& x) const override;
    std::string_view id() const override { return "random-ode"; }

    /// Radial part alone. Throws FlowDomainError when t + log F(rho0) falls
    /// below the profile minimum (the motion cannot be continued backward).
    static double advance_radius(double t, double rho0);
};

/// Closed-form solution flow of the Stratonovich system
///   d(rho) = (rho - rho^3) dt + rho o dw,   d(alpha) = (1/T) dt,
/// on radius/turns coordinates:
///   rho_t = rho_0 exp(t + w(t) - w(0)) / sqrt(1 + 2 rho_0^2 I_t),
///   I_t   = integral_0^t exp(2s + 2(w(s) - w(0))) ds  (trapezoid, signed),
///   alpha_t = alpha_0 + t/T mod 1,
/// where T is the period tag of the driving path (required). Backward
/// evaluation blows up in finite time when the denominator reaches zero;
/// that raises FlowDomainError.
class SdeLimitCycleFlow final : public FlowMap {
public:
    Vec2 evaluate(double t, const SamplePath& omega, const Vec2& x) const override;
    std::string_view id() const override { return "sde-limit-cycle"; }

    /// Radial part alone (no period tag needed).
    static double advance_radius(double t, const SamplePath& omega, double rho0);
};

/// Truncated stationary radius rho* = (2 integral_[trunc_lo, 0] of
/// exp(2s + 2w(s)) ds)^(-1/2), quadrature on the same grid as the flow.
/// truncation_bound = exp(2*trunc_lo + 2*max|w|) estimates the dropped
/// tail mass of the full integral over (-inf, 0].
struct StationaryRadius {
    double value = 0.0;
    double truncation_bound = 0.0;
};
StationaryRadius stationary_radius(const SamplePath& omega, double trunc_lo);

}  // namespace rds
