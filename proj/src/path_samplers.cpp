// SPDX-License-Identifier: Apache-2.0
#include "rds/path_samplers.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rds/errors.hpp"

namespace rds {
namespace {

struct GridSpec {
    std::size_t count;  // number of knots
    std::size_t zero;   // index of the knot at time 0
};

GridSpec straddling_grid(double window_lo, double window_hi, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("path sampler: dt must be positive");
    }
    if (!(window_lo < 0.0 && window_hi > 0.0)) {
        throw std::invalid_argument("path sampler: window must straddle 0");
    }
    const double steps_lo = -window_lo / dt;
    const double steps_hi = window_hi / dt;
    const double j0 = std::round(steps_lo);
    const double jn = std::round(steps_hi);
    if (std::fabs(steps_lo - j0) > 1e-6 || std::fabs(steps_hi - jn) > 1e-6) {
        std::ostringstream msg;
        msg << "path sampler: window [" << window_lo << ", " << window_hi
            << "] endpoints must be multiples of dt=" << dt;
        throw std::invalid_argument(msg.str());
    }
    return {static_cast<std::size_t>(j0 + jn) + 1, static_cast<std::size_t>(j0)};
}

}  // namespace

SamplePath sample_two_sided_bm(RngStream& stream, double window_lo, double window_hi,
                               double dt) {
    const GridSpec grid = straddling_grid(window_lo, window_hi, dt);
    std::vector<double> v(grid.count);
    const double step = std::sqrt(dt);
    v[grid.zero] = 0.0;
    for (std::size_t j = grid.zero + 1; j < grid.count; ++j) {
        v[j] = v[j - 1] + step * stream.next_gaussian();
    }
    for (std::size_t j = grid.zero; j-- > 0;) {
        v[j] = v[j + 1] + step * stream.next_gaussian();
    }
    return SamplePath(window_lo, dt, std::move(v));
}

SamplePath sample_two_sided_bm(std::uint64_t seed, double window_lo, double window_hi,
                               double dt) {
    RngStream stream(seed);
    return sample_two_sided_bm(stream, window_lo, window_hi, dt);
}

SamplePath zero_path(double window_lo, double window_hi, double dt) {
    const GridSpec grid = straddling_grid(window_lo, window_hi, dt);
    return SamplePath(window_lo, dt, std::vector<double>(grid.count, 0.0));
}

RunningMaxStats running_max_stats(const SamplePath& path, double t1, double t2) {
    if (!(0.0 < t1 && t1 < t2)) {
        throw std::invalid_argument("running_max_stats: need 0 < t1 < t2");
    }
    if (t2 > path.window_hi() + path.dt() * SamplePath::kIndexSnap) {
        throw WindowError("running_max_stats: t2 beyond window");
    }
    if (!path.contains(0.0)) {
        throw WindowError("running_max_stats: window does not reach back to 0");
    }
    const double base = path(t1);
    const auto knot_range = [&](double lo, double hi) {
        const long first =
            static_cast<long>(std::ceil(path.grid_index(lo) - SamplePath::kIndexSnap));
        const long last =
            static_cast<long>(std::floor(path.grid_index(hi) + SamplePath::kIndexSnap));
        return std::pair<long, long>{std::max(first, 0L),
                                     std::min(last, static_cast<long>(path.size() - 1))};
    };

    RunningMaxStats out;
    const auto [b0, b1] = knot_range(0.0, t1);
    double m1 = path.values()[static_cast<std::size_t>(b0)] - base;
    for (long k = b0 + 1; k <= b1; ++k) {
        m1 = std::max(m1, path.values()[static_cast<std::size_t>(k)] - base);
    }
    const auto [f0, f1] = knot_range(t1, t2);
    double m2 = path.values()[static_cast<std::size_t>(f0)] - base;
    for (long k = f0 + 1; k <= f1; ++k) {
        m2 = std::max(m2, path.values()[static_cast<std::size_t>(k)] - base);
    }
    out.backward_max = m1;
    out.forward_max = m2;
    return out;
}

}  // namespace rds
