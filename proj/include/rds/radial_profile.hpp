// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace rds {

/// Branch of the radial profile F(rho) = rho * exp(1/(2*rho^2)).
/// F is strictly decreasing on (0, 1] and strictly increasing on [1, inf),
/// with minimum F(1) = exp(1/2); every target above the minimum has exactly
/// one preimage on each branch.
enum class Branch { Lower, Upper };

/// F(rho). Overflows in double for rho below about 0.038; callers working
/// near 0 should stay in log space.
double radial_profile(double rho);

/// log F(rho) = log(rho) + 1/(2*rho^2); the log-space form used everywhere
/// internally. Well conditioned down to rho ~ 1e-3 and beyond.
double log_radial_profile(double rho);

/// log F(1), the minimum of the log profile.
inline constexpr double kLogProfileMin = 0.5;

/// Solve log_radial_profile(rho) = log_target on the requested branch.
///
/// Bracketed bisection in y = log(rho) down to a relative width of 1e-3,
/// then Newton polish; the residual |log F(rho) - log_target| lands within
/// a few ulps of log_target (<= 1e-12 for targets up to 1e30). Targets
/// within 1e-12 of the minimum return exactly 1; below that there is no
/// real solution and a FlowDomainError is thrown.
double invert_radial_profile_log(double log_target, Branch branch);

/// Convenience wrapper for linear-space targets: solves F(rho) = target.
double invert_radial_profile(double target, Branch branch);

}  // namespace rds
