// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rds/sample_path.hpp"

namespace rds {

/// Signed trapezoid quadrature of exp(2s + 2*path(s)) over [a, b] on the
/// path's own grid, with no subdivision: interior knots contribute exactly
/// their stored values, so integrals over adjacent grid-aligned ranges add
/// exactly. Partial edge cells (when a or b falls between knots) use the
/// interpolated path value. a > b yields the negated integral; evaluation
/// outside the window throws WindowError.
double integrate_exp_path(const SamplePath& path, double a, double b);

}  // namespace rds
