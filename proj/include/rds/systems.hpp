// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>

#include "rds/flows.hpp"
#include "rds/periodic.hpp"
#include "rds/wrps.hpp"

namespace rds {

/// A flow together with the slice pair that satisfies its existence
/// criterion, ready to feed check_criterion / extend / verify_wrps.
struct SystemBundle {
    std::shared_ptr<const FlowMap> flow;
    StateFunctional psi0;
    PeriodFunctional period_of;
    std::string id;
    double alpha0 = 0.0;
};

/// Build one of the two reference systems by id:
///  - "random-ode": unit-circle slice (cos a0, sin a0), a0 in radians;
///    period read from the path tag. Pairs naturally with periodic
///    ensembles.
///  - "sde-limit-cycle": stationary-radius slice
///    rho*(w) (cos 2*pi*a0, sin 2*pi*a0), a0 in turns; rho* truncated at
///    trunc_lo. Pairs naturally with Brownian paths carrying a period tag.
SystemBundle make_system(const std::string& id, double alpha0, double trunc_lo);

/// Period functional reading the path's tag (throws without one).
PeriodFunctional period_from_tag();

/// Initial-state samplers that keep all three legs of a composition-law
/// triple with |s|, |t| <= 2 inside the flow domain:
///  - random-ode: radii on either side of 1, far enough from the profile
///    minimum that backward transport stays solvable, plus the fixed
///    points 0 and 1 themselves;
///  - sde-limit-cycle: small radii so backward evaluation stays clear of
///    blow-up for typical noise (residual blow-ups are redrawn).
std::function<Vec2(RngStream&)> default_state_sampler(std::string_view flow_id);

/// Two-member smooth ensemble (periods 1 and 2, weights 0.3/0.7) used as
/// the default driver for the random-ode system.
PeriodicPathEnsemble default_ensemble();

}  // namespace rds
