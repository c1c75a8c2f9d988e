// SPDX-License-Identifier: Apache-2.0
#include "rds/sample_path.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rds/errors.hpp"

namespace rds {

SamplePath::SamplePath(double window_lo, double dt, std::vector<double> values,
                       std::optional<double> period_tag, double origin_offset)
    : t0_(window_lo),
      dt_(dt),
      values_(std::move(values)),
      period_tag_(period_tag),
      origin_offset_(origin_offset) {
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        throw std::invalid_argument("SamplePath: dt must be positive and finite");
    }
    if (!std::isfinite(t0_)) {
        throw std::invalid_argument("SamplePath: window_lo must be finite");
    }
    if (values_.size() < 2) {
        throw std::invalid_argument("SamplePath: need at least two grid knots");
    }
    if (period_tag_ && !(*period_tag_ > 0.0)) {
        throw std::invalid_argument("SamplePath: period tag must be positive");
    }
}

bool SamplePath::contains(double t) const {
    const double u = grid_index(t);
    return u >= -kIndexSnap && u <= static_cast<double>(size() - 1) + kIndexSnap;
}

double SamplePath::operator()(double t) const {
    const double u = grid_index(t);
    const double last = static_cast<double>(size() - 1);
    if (!(u >= -kIndexSnap && u <= last + kIndexSnap)) {
        std::ostringstream msg;
        msg << "evaluation at t=" << t << " outside window [" << window_lo() << ", "
            << window_hi() << "]";
        throw WindowError(msg.str());
    }
    const long nearest = std::lround(u);
    if (nearest >= 0 && nearest <= static_cast<long>(size() - 1) &&
        std::fabs(u - static_cast<double>(nearest)) <= kIndexSnap) {
        return values_[static_cast<std::size_t>(nearest)];
    }
    long i0 = static_cast<long>(std::floor(u));
    if (i0 < 0) i0 = 0;
    if (i0 > static_cast<long>(size() - 2)) i0 = static_cast<long>(size() - 2);
    const double frac = u - static_cast<double>(i0);
    const std::size_t i = static_cast<std::size_t>(i0);
    return values_[i] * (1.0 - frac) + values_[i + 1] * frac;
}

SamplePath SamplePath::shifted(double t) const {
    if (!contains(t)) {
        std::ostringstream msg;
        msg << "shift by t=" << t << " exhausts window [" << window_lo() << ", "
            << window_hi() << "]";
        throw WindowError(msg.str());
    }
    const double level = (*this)(t);
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        v[i] = values_[i] - level;
    }
    return SamplePath(t0_ - t, dt_, std::move(v), period_tag_, origin_offset_ + t);
}

SamplePath SamplePath::with_period(double period) const {
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw std::invalid_argument("with_period: period must be positive and finite");
    }
    return SamplePath(t0_, dt_, values_, period, origin_offset_);
}

}  // namespace rds
