// SPDX-License-Identifier: Apache-2.0
#include "rds/systems.hpp"

#include <cmath>
#include <stdexcept>

#include "rds/errors.hpp"

namespace rds {

PeriodFunctional period_from_tag() {
    return [](const SamplePath& omega) {
        const auto tag = omega.period_tag();
        if (!tag) throw FlowDomainError("period_from_tag: path has no period tag");
        return *tag;
    };
}

SystemBundle make_system(const std::string& id, double alpha0, double trunc_lo) {
    SystemBundle out;
    out.id = id;
    out.alpha0 = alpha0;
    out.period_of = period_from_tag();
    if (id == "random-ode") {
        out.flow = std::make_shared<RandomOdeFlow>();
        out.psi0 = [alpha0](const SamplePath&) {
            return Vec2{std::cos(alpha0), std::sin(alpha0)};
        };
    } else if (id == "sde-limit-cycle") {
        out.flow = std::make_shared<SdeLimitCycleFlow>();
        out.psi0 = [alpha0, trunc_lo](const SamplePath& omega) {
            const double rho = stationary_radius(omega, trunc_lo).value;
            return Vec2{rho * std::cos(kTwoPi * alpha0), rho * std::sin(kTwoPi * alpha0)};
        };
    } else {
        throw ConfigError("unknown system id: " + id);
    }
    return out;
}

std::function<Vec2(RngStream&)> default_state_sampler(std::string_view flow_id) {
    if (flow_id == "random-ode") {
        return [](RngStream& stream) {
            const double alpha = stream.next_uniform(0.0, kTwoPi);
            const double pick = stream.next_unit();
            double rho;
            if (pick < 0.45) {
                // Lower branch; log F(0.28) > 5, so +-4 time units of
                // backward transport stay above the profile minimum.
                rho = stream.next_uniform(0.05, 0.28);
            } else if (pick < 0.90) {
                // Upper branch; log F >= 4.6 needs rho >= ~100.
                rho = std::exp(stream.next_uniform(std::log(100.0), std::log(800.0)));
            } else if (pick < 0.95) {
                rho = 1.0;
            } else {
                rho = 0.0;
            }
            return from_polar_radians({alpha, rho});
        };
    }
    if (flow_id == "sde-limit-cycle") {
        return [](RngStream& stream) {
            const double alpha = stream.next_uniform(0.0, 1.0);
            const double rho = stream.next_uniform(0.05, 0.5);
            return from_polar_turns({alpha, rho});
        };
    }
    throw std::invalid_argument("default_state_sampler: unknown flow id");
}

PeriodicPathEnsemble default_ensemble() {
    std::vector<EnsembleMember> members;
    members.push_back(
        {PeriodicWaveform(1.0, {{1, 0.6, 0.25}, {3, 0.1, 0.0}}), 0.3});
    members.push_back(
        {PeriodicWaveform(2.0, {{1, 0.8, 0.0}, {2, 0.0, 0.3}}), 0.7});
    return PeriodicPathEnsemble(std::move(members));
}

}  // namespace rds
