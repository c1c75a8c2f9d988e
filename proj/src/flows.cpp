// SPDX-License-Identifier: Apache-2.0
#include "rds/flows.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rds/errors.hpp"
#include "rds/path_integrals.hpp"

namespace rds {
namespace {

// Radii this close to 1 (relative) sit on the invariant circle; hypot of
// an exactly-unit input can be off by a few ulps.
constexpr double kUnitSnap = 8.0 * std::numeric_limits<double>::epsilon();

}  // namespace

double RandomOdeFlow::advance_radius(double t, double rho0) {
    if (rho0 == 0.0) return 0.0;
    if (std::fabs(rho0 - 1.0) <= kUnitSnap) return 1.0;
    const Branch branch = rho0 < 1.0 ? Branch::Lower : Branch::Upper;
    return invert_radial_profile_log(t + log_radial_profile(rho0), branch);
}

Vec2 RandomOdeFlow::evaluate(double t, const SamplePath& omega, const Vec2& x) const {
    if (t == 0.0) return x;
    const double rho0 = x.norm();
    if (rho0 == 0.0) return {0.0, 0.0};
    const double rho = advance_radius(t, rho0);
    const double alpha = wrap_radians(std::atan2(x.y, x.x) + omega(t) - omega(0.0));
    return from_polar_radians({alpha, rho});
}

double SdeLimitCycleFlow::advance_radius(double t, const SamplePath& omega, double rho0) {
    if (rho0 == 0.0) return 0.0;
    const double w0 = omega(0.0);
    const double integral = std::exp(-2.0 * w0) * integrate_exp_path(omega, 0.0, t);
    const double denom = 1.0 + 2.0 * rho0 * rho0 * integral;
    if (!(denom > 0.0)) {
        std::ostringstream msg;
        msg << "radial solution from rho0=" << rho0 << " blows up before t=" << t;
        throw FlowDomainError(msg.str());
    }
    return rho0 * std::exp(t + omega(t) - w0) / std::sqrt(denom);
}

Vec2 SdeLimitCycleFlow::evaluate(double t, const SamplePath& omega, const Vec2& x) const {
    if (t == 0.0) return x;
    const auto period = omega.period_tag();
    if (!period) {
        throw FlowDomainError("sde-limit-cycle: driving path has no period tag");
    }
    const double rho0 = x.norm();
    const double rho = advance_radius(t, omega, rho0);
    const double alpha = wrap_unit(std::atan2(x.y, x.x) / kTwoPi + t / *period);
    return from_polar_turns({alpha, rho});
}

StationaryRadius stationary_radius(const SamplePath& omega, double trunc_lo) {
    if (!(trunc_lo < 0.0)) {
        throw std::invalid_argument("stationary_radius: trunc_lo must be negative");
    }
    if (trunc_lo < omega.window_lo() - omega.dt() * SamplePath::kIndexSnap) {
        throw WindowError("stationary_radius: trunc_lo before the window start");
    }
    const double w0 = omega(0.0);
    const double integral =
        std::exp(-2.0 * w0) * integrate_exp_path(omega, trunc_lo, 0.0);
    StationaryRadius out;
    out.value = 1.0 / std::sqrt(2.0 * integral);

    double max_abs = 0.0;
    const long first = static_cast<long>(
        std::ceil(omega.grid_index(trunc_lo) - SamplePath::kIndexSnap));
    const long last =
        static_cast<long>(std::floor(omega.grid_index(0.0) + SamplePath::kIndexSnap));
    for (long k = std::max(first, 0L);
         k <= std::min(last, static_cast<long>(omega.size() - 1)); ++k) {
        max_abs = std::max(max_abs,
                           std::fabs(omega.values()[static_cast<std::size_t>(k)] - w0));
    }
    out.truncation_bound = std::exp(2.0 * trunc_lo + 2.0 * max_abs);
    return out;
}

SkewProductResult skew_product(const FlowMap& flow, double t, const SamplePath& omega,
                               const Vec2& x) {
    return {omega.shifted(t), flow.evaluate(t, omega, x)};
}

double cocycle_residual(const FlowMap& flow, const SamplePath& omega, double s, double t,
                        const Vec2& x) {
    const Vec2 direct = flow.evaluate(t + s, omega, x);
    const Vec2 composed = flow.evaluate(t, omega.shifted(s), flow.evaluate(s, omega, x));
    return distance(direct, composed);
}

CocycleReport check_cocycle(const FlowMap& flow, const SamplePath& omega,
                            const CocycleOptions& options) {
    if (!options.state_sampler) {
        throw std::invalid_argument("check_cocycle: a state sampler is required");
    }
    RngStream stream(options.seed, 0x0C0C);
    const double dt = omega.dt();
    const auto draw_grid_time = [&]() {
        const double raw = stream.next_uniform(-options.horizon, options.horizon);
        return std::round(raw / dt) * dt;
    };

    CocycleReport report;
    const int max_attempts = 100 * options.samples;
    int attempts = 0;
    while (report.samples_run < options.samples && attempts < max_attempts) {
        ++attempts;
        const double s = draw_grid_time();
        const double t = draw_grid_time();
        const Vec2 x = options.state_sampler(stream);
        double r = 0.0;
        try {
            r = cocycle_residual(flow, omega, s, t, x);
        } catch (const FlowDomainError&) {
            ++report.samples_rejected;
            continue;
        } catch (const WindowError&) {
            ++report.samples_rejected;
            continue;
        }
        ++report.samples_run;
        if (r > report.max_residual) {
            report.max_residual = r;
            report.worst_s = s;
            report.worst_t = t;
            report.worst_x = x;
        }
    }
    if (report.samples_run < options.samples) {
        throw std::runtime_error(
            "check_cocycle: too many rejected draws; widen the window or adjust the "
            "state sampler");
    }
    return report;
}

}  // namespace rds
