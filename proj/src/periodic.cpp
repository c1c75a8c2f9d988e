// SPDX-License-Identifier: Apache-2.0
#include "rds/periodic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rds/geometry.hpp"

namespace rds {

PeriodicWaveform::PeriodicWaveform(double period, std::vector<Harmonic> harmonics)
    : period_(period), harmonics_(std::move(harmonics)) {
    if (!(period_ > 0.0) || !std::isfinite(period_)) {
        throw std::invalid_argument("PeriodicWaveform: period must be positive");
    }
    if (harmonics_.empty()) {
        throw std::invalid_argument("PeriodicWaveform: need at least one harmonic");
    }
    for (const Harmonic& h : harmonics_) {
        if (h.order < 1) {
            throw std::invalid_argument("PeriodicWaveform: harmonic order must be >= 1");
        }
    }
}

double PeriodicWaveform::operator()(double s) const {
    double out = 0.0;
    for (const Harmonic& h : harmonics_) {
        const double arg = kTwoPi * static_cast<double>(h.order) * s / period_;
        out += h.sin_amp * std::sin(arg) + h.cos_amp * std::cos(arg);
    }
    return out;
}

PeriodicPathEnsemble::PeriodicPathEnsemble(std::vector<EnsembleMember> members)
    : members_(std::move(members)) {
    if (members_.empty()) {
        throw std::invalid_argument("PeriodicPathEnsemble: empty ensemble");
    }
    double total = 0.0;
    double prev_period = 0.0;
    for (const EnsembleMember& m : members_) {
        if (!(m.weight > 0.0)) {
            throw std::invalid_argument("PeriodicPathEnsemble: weights must be positive");
        }
        if (!(m.waveform.period() > prev_period)) {
            throw std::invalid_argument(
                "PeriodicPathEnsemble: periods must be strictly increasing");
        }
        prev_period = m.waveform.period();
        total += m.weight;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "PeriodicPathEnsemble: weights sum to " << total << ", expected 1";
        throw std::invalid_argument(msg.str());
    }
    // Spot-check exact periodicity of each member.
    for (const EnsembleMember& m : members_) {
        const double T = m.waveform.period();
        for (double s : {0.13 * T, 0.51 * T, -1.37 * T, 2.71 * T}) {
            if (std::fabs(m.waveform(s + T) - m.waveform(s)) > 1e-9) {
                throw std::invalid_argument(
                    "PeriodicPathEnsemble: member is not periodic at its stated period");
            }
        }
    }
}

std::size_t PeriodicPathEnsemble::pick_member(double u) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        acc += members_[i].weight;
        if (u < acc) return i;
    }
    return members_.size() - 1;
}

SamplePath discretize_member(const PeriodicWaveform& waveform, double phase,
                             double window_lo, double window_hi, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("discretize_member: dt must be positive");
    if (!(window_lo < 0.0 && window_hi > 0.0)) {
        throw std::invalid_argument("discretize_member: window must straddle 0");
    }
    const double steps_lo = -window_lo / dt;
    const double steps_hi = window_hi / dt;
    if (std::fabs(steps_lo - std::round(steps_lo)) > 1e-6 ||
        std::fabs(steps_hi - std::round(steps_hi)) > 1e-6) {
        throw std::invalid_argument(
            "discretize_member: window endpoints must be multiples of dt");
    }
    const long j0 = std::lround(steps_lo);
    const std::size_t n = static_cast<std::size_t>(j0 + std::lround(steps_hi)) + 1;
    std::vector<double> v(n);
    const double level = waveform(phase);
    for (std::size_t j = 0; j < n; ++j) {
        // Offsets are anchored at the zero knot so v[j0] is exactly 0.
        const double offset = dt * static_cast<double>(static_cast<long>(j) - j0);
        v[j] = waveform(phase + offset) - level;
    }
    return SamplePath(window_lo, dt, std::move(v), waveform.period());
}

SamplePath sample_periodic(const PeriodicPathEnsemble& ensemble, RngStream& stream,
                           double window_lo, double window_hi, double dt) {
    const std::size_t pick = ensemble.pick_member(stream.next_unit());
    const PeriodicWaveform& w = ensemble.members()[pick].waveform;
    const double phase = stream.next_unit() * w.period();
    return discretize_member(w, phase, window_lo, window_hi, dt);
}

SamplePath sample_periodic(const PeriodicPathEnsemble& ensemble, std::uint64_t seed,
                           double window_lo, double window_hi, double dt) {
    RngStream stream(seed);
    return sample_periodic(ensemble, stream, window_lo, window_hi, dt);
}

}  // namespace rds
