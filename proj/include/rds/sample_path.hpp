// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace rds {

/// One noise realization on a finite window: values on a uniform grid,
/// linear interpolation between knots, hard errors outside the window.
///
/// Shifting by t produces the path s -> w(t+s) - w(t) on the translated
/// window [lo-t, hi-t]. The new knots land exactly on the old ones, so a
/// shift never resamples; only the single value w(t) is interpolated.
/// An optional period tag carries the random period of the realization;
/// it is constant along a shift orbit and every shift preserves it.
class SamplePath {
public:
    SamplePath(double window_lo, double dt, std::vector<double> values,
               std::optional<double> period_tag = std::nullopt,
               double origin_offset = 0.0);

    double window_lo() const { return t0_; }
    double window_hi() const { return t0_ + dt_ * static_cast<double>(size() - 1); }
    double dt() const { return dt_; }
    std::size_t size() const { return values_.size(); }
    double knot_time(std::size_t i) const { return t0_ + dt_ * static_cast<double>(i); }
    const std::vector<double>& values() const { return values_; }
    std::optional<double> period_tag() const { return period_tag_; }
    double origin_offset() const { return origin_offset_; }

    bool contains(double t) const;

    /// Value at time t by linear interpolation; throws WindowError outside.
    double operator()(double t) const;

    /// Shift operator: result(s) = (*this)(t+s) - (*this)(t), window
    /// translated to [lo-t, hi-t]. Throws WindowError when t leaves the
    /// window (the shifted path could no longer be evaluated at 0).
    SamplePath shifted(double t) const;

    /// Copy with the period tag set; the period must be positive.
    SamplePath with_period(double period) const;

    /// Fractional grid index of time t (0 at the first knot).
    double grid_index(double t) const { return (t - t0_) / dt_; }

    /// Times within this fraction of a grid step of a knot snap onto it.
    static constexpr double kIndexSnap = 1e-6;

private:
    double t0_;
    double dt_;
    std::vector<double> values_;
    std::optional<double> period_tag_;
    double origin_offset_;
};

}  // namespace rds
