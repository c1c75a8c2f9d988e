// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rds/rng.hpp"
#include "rds/sample_path.hpp"

namespace rds {

/// One Fourier mode of a periodic waveform: order k contributes
/// sin_amp*sin(2*pi*k*s/T) + cos_amp*cos(2*pi*k*s/T).
struct Harmonic {
    int order = 1;
    double sin_amp = 0.0;
    double cos_amp = 0.0;
};

/// Smooth closed-form periodic function (a finite trigonometric sum).
/// Being a trig polynomial it is continuously differentiable and exactly
/// periodic at every argument, not just on a grid.
class PeriodicWaveform {
public:
    PeriodicWaveform(double period, std::vector<Harmonic> harmonics);

    double period() const { return period_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }
    double operator()(double s) const;

private:
    double period_;
    std::vector<Harmonic> harmonics_;
};

struct EnsembleMember {
    PeriodicWaveform waveform;
    double weight = 0.0;
};

/// Finite weighted family of periodic waveforms with strictly increasing
/// periods; weights are a probability vector. Sampling draws a member by
/// weight and a uniform phase in [0, period), i.e. a uniform point on the
/// member's shift orbit.
class PeriodicPathEnsemble {
public:
    explicit PeriodicPathEnsemble(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember>& members() const { return members_; }
    std::size_t pick_member(double u) const;

private:
    std::vector<EnsembleMember> members_;
};

/// Discretize a phase-shifted member on a grid window: value(s) =
/// waveform(phase + s) - waveform(phase), tagged with the waveform period.
SamplePath discretize_member(const PeriodicWaveform& waveform, double phase,
                             double window_lo, double window_hi, double dt);

SamplePath sample_periodic(const PeriodicPathEnsemble& ensemble, RngStream& stream,
                           double window_lo, double window_hi, double dt);
SamplePath sample_periodic(const PeriodicPathEnsemble& ensemble, std::uint64_t seed,
                           double window_lo, double window_hi, double dt);

}  // namespace rds
