// SPDX-License-Identifier: Apache-2.0
#include "rds/wrps.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rds/errors.hpp"
#include "rds/rng.hpp"

namespace rds {

Wrps::Wrps(std::function<Vec2(double, const SamplePath&)> psi, PeriodFunctional period_of,
           std::string description)
    : psi_(std::move(psi)),
      period_of_(std::move(period_of)),
      description_(std::move(description)) {
    if (!psi_ || !period_of_) {
        throw std::invalid_argument("Wrps: psi and period_of must be callable");
    }
}

double check_criterion(const FlowMap& flow, const StateFunctional& psi0,
                       const PeriodFunctional& period_of, const SamplePath& omega) {
    const double period = period_of(omega);
    const SamplePath back = omega.shifted(-period);
    const Vec2 transported = flow.evaluate(period, back, psi0(back));
    return distance(psi0(omega), transported);
}

Wrps extend(StateFunctional psi0, PeriodFunctional period_of, const FlowMap& flow) {
    const FlowMap* f = &flow;
    auto psi = [psi0 = std::move(psi0), f](double t, const SamplePath& omega) {
        const SamplePath back = omega.shifted(-t);
        return f->evaluate(t, back, psi0(back));
    };
    return Wrps(std::move(psi), std::move(period_of),
                std::string("extension over ") + std::string(flow.id()));
}

AdaptedSlice adapt_random_periodic_path(const RandomPeriodicPath& rpp) {
    if (!rpp.y || !(rpp.tau > 0.0)) {
        throw std::invalid_argument(
            "adapt_random_periodic_path: need a path functional and tau > 0");
    }
    AdaptedSlice out;
    out.psi0 = [y = rpp.y](const SamplePath& omega) { return y(0.0, omega); };
    out.period_of = [tau = rpp.tau](const SamplePath&) { return tau; };
    return out;
}

VerifyReport verify_wrps(const Wrps& wrps, const FlowMap& flow, const SamplePath& omega,
                         const VerifyOptions& options) {
    RngStream stream(options.seed, 0x3E71);
    const double dt = omega.dt();
    const auto draw_grid_time = [&]() {
        const double raw = stream.next_uniform(-options.horizon, options.horizon);
        return std::round(raw / dt) * dt;
    };

    VerifyReport report;
    for (int i = 0; i < options.samples; ++i) {
        const double s = draw_grid_time();
        const double t = draw_grid_time();
        try {
            const Vec2 psi_s = wrps.psi(s, omega);
            const Vec2 lhs_eq = flow.evaluate(t, omega, psi_s);
            const Vec2 rhs_eq = wrps.psi(t + s, omega.shifted(t));
            const double r_eq = distance(lhs_eq, rhs_eq);
            if (r_eq > report.max_equivariance_residual) {
                report.max_equivariance_residual = r_eq;
                report.equivariance_witness = {s, t, lhs_eq, rhs_eq, r_eq};
            }

            const double period = wrps.period_of(omega.shifted(-s));
            const Vec2 lhs_per = wrps.psi(s + period, omega);
            const Vec2 rhs_per = psi_s;
            const double r_per = distance(lhs_per, rhs_per);
            if (r_per > report.max_periodicity_residual) {
                report.max_periodicity_residual = r_per;
                report.periodicity_witness = {s, t, lhs_per, rhs_per, r_per};
            }
            ++report.samples_run;
        } catch (const WindowError&) {
            ++report.samples_skipped;
        } catch (const FlowDomainError&) {
            ++report.samples_skipped;
        }
    }
    return report;
}

Wrps corrupt_wrps(const Wrps& wrps, Corruption kind, double factor) {
    switch (kind) {
        case Corruption::None:
            return wrps;
        case Corruption::Period:
            return Wrps(
                [wrps](double s, const SamplePath& w) { return wrps.psi(s, w); },
                [wrps, factor](const SamplePath& w) { return factor * wrps.period_of(w); },
                wrps.description() + " (period x" + std::to_string(factor) + ")");
        case Corruption::Radius:
            return Wrps(
                [wrps, factor](double s, const SamplePath& w) {
                    return factor * wrps.psi(s, w);
                },
                [wrps](const SamplePath& w) { return wrps.period_of(w); },
                wrps.description() + " (radius x" + std::to_string(factor) + ")");
        case Corruption::AngularRate:
            return Wrps(
                [wrps, factor](double s, const SamplePath& w) {
                    const double extra = kTwoPi * (factor - 1.0) * s / wrps.period_of(w);
                    return rotate(wrps.psi(s, w), extra);
                },
                [wrps](const SamplePath& w) { return wrps.period_of(w); },
                wrps.description() + " (rate x" + std::to_string(factor) + ")");
    }
    throw std::invalid_argument("corrupt_wrps: unknown corruption");
}

double estimate_period(std::span<const std::pair<double, Vec2>> trajectory,
                       double section_angle) {
    if (trajectory.size() < 2) {
        throw std::invalid_argument("estimate_period: trajectory too short");
    }
    // Unwrap the angle so crossings of the section become level crossings
    // of section_angle + 2*pi*k in the increasing direction.
    std::vector<double> unwrapped(trajectory.size());
    double prev = std::atan2(trajectory[0].second.y, trajectory[0].second.x);
    unwrapped[0] = prev;
    double accum = 0.0;
    for (std::size_t i = 1; i < trajectory.size(); ++i) {
        const double a = std::atan2(trajectory[i].second.y, trajectory[i].second.x);
        double delta = a - prev;
        if (delta > kTwoPi / 2.0) delta -= kTwoPi;
        if (delta < -kTwoPi / 2.0) delta += kTwoPi;
        accum += delta;
        unwrapped[i] = unwrapped[0] + accum;
        prev = a;
    }

    std::vector<double> crossings;
    for (std::size_t i = 1; i < unwrapped.size(); ++i) {
        const double a = unwrapped[i - 1];
        const double b = unwrapped[i];
        if (!(b > a)) continue;  // increasing-angle crossings only
        // Levels section_angle + 2*pi*k inside (a, b].
        const double k_lo = std::ceil((a - section_angle) / kTwoPi + 1e-12);
        const double k_hi = std::floor((b - section_angle) / kTwoPi + 1e-12);
        for (double k = k_lo; k <= k_hi; k += 1.0) {
            const double level = section_angle + kTwoPi * k;
            const double frac = (level - a) / (b - a);
            const double t0 = trajectory[i - 1].first;
            const double t1 = trajectory[i].first;
            crossings.push_back(t0 + frac * (t1 - t0));
        }
    }
    if (crossings.size() < 2) {
        throw std::invalid_argument("estimate_period: fewer than two section crossings");
    }
    double gap_sum = 0.0;
    for (std::size_t i = 1; i < crossings.size(); ++i) {
        gap_sum += crossings[i] - crossings[i - 1];
    }
    return gap_sum / static_cast<double>(crossings.size() - 1);
}

}  // namespace rds
