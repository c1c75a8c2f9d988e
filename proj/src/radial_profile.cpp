// SPDX-License-Identifier: Apache-2.0
#include "rds/radial_profile.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rds/errors.hpp"

namespace rds {
namespace {

// Profile in y = log(rho) coordinates: h(y) = y + exp(-2y)/2.
// Same expression on both branches; h decreases on y < 0, increases on
// y > 0, minimum h(0) = 1/2.
double h(double y) {
    if (y < -350.0) return std::numeric_limits<double>::infinity();
    return y + 0.5 * std::exp(-2.0 * y);
}

double h_prime(double y) { return 1.0 - std::exp(-2.0 * y); }

constexpr double kDomainSlack = 1e-12;

double solve_log_coord(double log_target, Branch branch) {
    const double excess = log_target - kLogProfileMin;
    if (excess < -kDomainSlack) {
        std::ostringstream msg;
        msg << "radial profile target log " << log_target
            << " below the minimum log F(1) = " << kLogProfileMin;
        throw FlowDomainError(msg.str());
    }
    if (excess <= kDomainSlack) return 0.0;

    double lo, hi;  // bracket with h(lo) and h(hi) on opposite sides
    if (branch == Branch::Lower) {
        // h(y) ~ exp(-2y)/2 for very negative y, so this lands past the root.
        double y = -0.55 * (std::log(2.0 * log_target + 2.0) + 1.0);
        while (h(y) < log_target) y *= 2.0;
        lo = y;
        hi = 0.0;
    } else {
        lo = 0.0;
        hi = std::max(1.0, log_target);  // h(L) = L + exp(-2L)/2 >= L
    }

    // Bisection to a coarse interval. The sign orientation differs per
    // branch: on the lower branch h decreases, on the upper it increases.
    const bool increasing = branch == Branch::Upper;
    while (hi - lo > 1e-3 * std::max({1.0, std::fabs(lo), std::fabs(hi)})) {
        const double mid = 0.5 * (lo + hi);
        const bool above = h(mid) > log_target;
        if (above == increasing) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    double y = 0.5 * (lo + hi);
    // Near the profile minimum h(y) ~ 1/2 + y^2 and Newton stalls; seed
    // with the quadratic root instead.
    if (excess < 1e-8) {
        y = increasing ? std::sqrt(excess) : -std::sqrt(excess);
    }
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::fabs(log_target));
    for (int it = 0; it < 80; ++it) {
        const double r = h(y) - log_target;
        if (std::fabs(r) <= tol) break;
        if ((r > 0.0) == increasing) {
            hi = y;
        } else {
            lo = y;
        }
        const double d = h_prime(y);
        double next = d != 0.0 ? y - r / d : 0.5 * (lo + hi);
        if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
        if (next == y) {
            next = 0.5 * (lo + hi);
            if (next == y) break;
        }
        y = next;
    }
    return y;
}

}  // namespace

double radial_profile(double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("radial_profile: rho must be positive");
    return rho * std::exp(1.0 / (2.0 * rho * rho));
}

double log_radial_profile(double rho) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("log_radial_profile: rho must be positive");
    }
    return std::log(rho) + 1.0 / (2.0 * rho * rho);
}

double invert_radial_profile_log(double log_target, Branch branch) {
    if (!std::isfinite(log_target)) {
        throw std::invalid_argument("invert_radial_profile_log: target must be finite");
    }
    return std::exp(solve_log_coord(log_target, branch));
}

double invert_radial_profile(double target, Branch branch) {
    if (!(target > 0.0) || !std::isfinite(target)) {
        throw std::invalid_argument("invert_radial_profile: target must be positive");
    }
    return invert_radial_profile_log(std::log(target), branch);
}

}  // namespace rds
