// SPDX-License-Identifier: Apache-2.0
#include "rds/path_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rds/errors.hpp"

namespace rds {

double integrate_exp_path(const SamplePath& path, double a, double b) {
    double sign = 1.0;
    if (a == b) return 0.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    if (!path.contains(a) || !path.contains(b)) {
        throw WindowError("integrate_exp_path: range outside the path window");
    }

    const double dt = path.dt();
    const auto& v = path.values();
    const auto knot_value = [&](long k) {
        return std::exp(2.0 * path.knot_time(static_cast<std::size_t>(k)) +
                        2.0 * v[static_cast<std::size_t>(k)]);
    };
    const auto point_value = [&](double t) { return std::exp(2.0 * t + 2.0 * path(t)); };

    const double snap = SamplePath::kIndexSnap;
    long ia = static_cast<long>(std::ceil(path.grid_index(a) - snap));
    long ib = static_cast<long>(std::floor(path.grid_index(b) + snap));
    ia = std::clamp(ia, 0L, static_cast<long>(path.size() - 1));
    ib = std::clamp(ib, 0L, static_cast<long>(path.size() - 1));

    if (ia > ib) {
        // Both endpoints inside a single grid cell.
        return sign * 0.5 * (point_value(a) + point_value(b)) * (b - a);
    }

    double sum = 0.0;
    const double edge_eps = dt * snap;
    const double ta = path.knot_time(static_cast<std::size_t>(ia));
    if (ta - a > edge_eps) {
        sum += 0.5 * (point_value(a) + knot_value(ia)) * (ta - a);
    }
    double prev = knot_value(ia);
    for (long k = ia; k < ib; ++k) {
        const double next = knot_value(k + 1);
        sum += 0.5 * (prev + next) * dt;
        prev = next;
    }
    const double tb = path.knot_time(static_cast<std::size_t>(ib));
    if (b - tb > edge_eps) {
        sum += 0.5 * (prev + point_value(b)) * (b - tb);
    }
    return sign * sum;
}

}  // namespace rds
