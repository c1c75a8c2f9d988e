// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "rds/rng.hpp"
#include "rds/sample_path.hpp"

namespace rds {

/// Two-sided Brownian motion on [window_lo, window_hi] with w(0) = 0.
///
/// Forward and backward halves are independent random walks glued at 0
/// (the backward half is an independent motion run in reflected time), so
/// all grid increments are independent N(0, dt). The window must straddle 0
/// and both endpoints must sit on the dt-grid through 0.
SamplePath sample_two_sided_bm(RngStream& stream, double window_lo, double window_hi,
                               double dt);
SamplePath sample_two_sided_bm(std::uint64_t seed, double window_lo, double window_hi,
                               double dt);

/// The identically-zero path on the same kind of grid.
SamplePath zero_path(double window_lo, double window_hi, double dt);

/// Running maxima around an interior time t1 < t2:
/// forward_max = max over grid times u in [t1, t2] of w(u) - w(t1),
/// backward_max = max over grid times u in [0, t1] of w(u) - w(t1).
/// For Brownian paths the two are independent with half-normal laws of
/// scales sqrt(t2 - t1) and sqrt(t1).
struct RunningMaxStats {
    double backward_max = 0.0;  // M1
    double forward_max = 0.0;   // M2
};
RunningMaxStats running_max_stats(const SamplePath& path, double t1, double t2);

}  // namespace rds
