// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "rds/geometry.hpp"
#include "rds/rng.hpp"
#include "rds/sample_path.hpp"

namespace rds {

/// Pure evaluation contract of a noise-driven flow on the plane.
///
/// evaluate(t, w, x) is the state reached at time t from x under the
/// realization w, with evaluate(0, w, x) == x exactly and the composition
/// law evaluate(t+s, w, x) == evaluate(t, w.shifted(s), evaluate(s, w, x))
/// holding up to quadrature rounding on a shared grid (see check_cocycle).
class FlowMap {
public:
    virtual ~FlowMap() = default;

    virtual Vec2 evaluate(double t, const SamplePath& omega, const Vec2& x) const = 0;
    virtual std::string_view id() const = 0;

    static constexpr int kStateDim = 2;
};

/// Joint motion on path x state space: (w, x) -> (shifted path, flowed state).
struct SkewProductResult {
    SamplePath path;
    Vec2 state;
};
SkewProductResult skew_product(const FlowMap& flow, double t, const SamplePath& omega,
                               const Vec2& x);

/// Residual of the composition law for one triple (s, t, x):
/// || evaluate(t+s, w, x) - evaluate(t, shift(w, s), evaluate(s, w, x)) ||.
double cocycle_residual(const FlowMap& flow, const SamplePath& omega, double s, double t,
                        const Vec2& x);

struct CocycleOptions {
    int samples = 200;
    double horizon = 2.0;
    std::uint64_t seed = 0;
    /// Draws initial states; defaults must keep every leg of the triple
    /// inside the flow's domain (see default_state_sampler in systems.hpp).
    std::function<Vec2(RngStream&)> state_sampler;
};

struct CocycleReport {
    double max_residual = 0.0;
    double worst_s = 0.0;
    double worst_t = 0.0;
    Vec2 worst_x;
    int samples_run = 0;
    int samples_rejected = 0;  // domain/window failures, redrawn
};

/// Sample random (s, t, x) with |s|, |t| <= horizon, s and t snapped to the
/// path grid, and report the worst composition residual. Draws that leave
/// the flow domain are rejected and redrawn deterministically.
CocycleReport check_cocycle(const FlowMap& flow, const SamplePath& omega,
                            const CocycleOptions& options);

}  // namespace rds
