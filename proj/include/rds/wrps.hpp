// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "rds/flow.hpp"
#include "rds/geometry.hpp"
#include "rds/sample_path.hpp"

namespace rds {

using StateFunctional = std::function<Vec2(const SamplePath&)>;
using PeriodFunctional = std::function<double(const SamplePath&)>;

/// Weak random periodic solution candidate: a trajectory functional
/// psi(s, w) together with a period functional period_of(w).
///
/// The defining identities, checked numerically by verify_wrps, are
///   flow(t, w) psi(s, w) == psi(t+s, shift(w, t))          (equivariance)
///   psi(s + period_of(shift(w, -s)), w) == psi(s, w)       (periodicity)
/// Period functionals built from the path's period tag are constant along
/// shift orbits by construction.
class Wrps {
public:
    Wrps(std::function<Vec2(double, const SamplePath&)> psi, PeriodFunctional period_of,
         std::string description);

    Vec2 psi(double s, const SamplePath& omega) const { return psi_(s, omega); }
    double period_of(const SamplePath& omega) const { return period_of_(omega); }
    const std::string& description() const { return description_; }

private:
    std::function<Vec2(double, const SamplePath&)> psi_;
    PeriodFunctional period_of_;
    std::string description_;
};

/// Existence-criterion residual for a time-zero slice:
/// || psi0(w) - flow(T(w), shift(w, -T(w))) psi0(shift(w, -T(w))) ||.
/// A vanishing residual is equivalent to the flow having a weak random
/// periodic solution extending psi0.
double check_criterion(const FlowMap& flow, const StateFunctional& psi0,
                       const PeriodFunctional& period_of, const SamplePath& omega);

/// Extend a time-zero slice to a full trajectory functional:
/// psi(t, w) = flow(t, shift(w, -t)) psi0(shift(w, -t)), psi(0, .) = psi0.
/// The flow is captured by reference and must outlive the returned object.
Wrps extend(StateFunctional psi0, PeriodFunctional period_of, const FlowMap& flow);

/// Path functional with a deterministic period, uniform over realizations:
///   flow(t, shift(w, s)) y(s, w) == y(t+s, w),  y(s+tau, w) == y(s, shift(w, tau)).
struct RandomPeriodicPath {
    std::function<Vec2(double, const SamplePath&)> y;
    double tau = 0.0;
};

/// Turn a deterministic-period path functional into a criterion pair:
/// psi0 = y(0, .), period_of == tau. Feed the result to check_criterion or
/// extend.
struct AdaptedSlice {
    StateFunctional psi0;
    PeriodFunctional period_of;
};
AdaptedSlice adapt_random_periodic_path(const RandomPeriodicPath& rpp);

struct VerifyOptions {
    int samples = 200;
    double horizon = 2.0;
    std::uint64_t seed = 0;
};

struct Witness {
    double s = 0.0;
    double t = 0.0;
    Vec2 lhs;
    Vec2 rhs;
    double residual = 0.0;
};

struct VerifyReport {
    double max_equivariance_residual = 0.0;
    double max_periodicity_residual = 0.0;
    Witness equivariance_witness;
    Witness periodicity_witness;
    int samples_run = 0;
    int samples_skipped = 0;  // window exhaustion, reported not fatal

    bool within(double tolerance) const {
        return samples_run > 0 && max_equivariance_residual <= tolerance &&
               max_periodicity_residual <= tolerance;
    }
};

/// Check both defining identities on random (s, t) with |s|, |t| <= horizon
/// snapped to the path grid; returns the worst residuals with their argmax
/// witnesses. Samples whose evaluations exhaust the window are skipped and
/// counted.
VerifyReport verify_wrps(const Wrps& wrps, const FlowMap& flow, const SamplePath& omega,
                         const VerifyOptions& options);

/// Ways to deliberately break a candidate, for falsification tests.
enum class Corruption { None, Period, Radius, AngularRate };

/// Wrap a candidate with a 10%-style defect: report a wrong period, scale
/// the radius, or add a spurious angular drift factor*s/period.
Wrps corrupt_wrps(const Wrps& wrps, Corruption kind, double factor = 1.1);

/// Mean return time to a half-line section through the origin (at angle
/// section_angle, radians), from same-direction crossings of the unwrapped
/// trajectory angle, located by linear interpolation. Needs at least two
/// increasing-angle crossings.
double estimate_period(std::span<const std::pair<double, Vec2>> trajectory,
                       double section_angle);

}  // namespace rds
