// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace rds {

/// Number of workers parallel_for will use; env RDSLAB_THREADS overrides
/// the hardware count.
std::size_t worker_count();

/// Run fn(i) for i in [0, n) on a fixed static partition of the index
/// space. Tasks must only write to their own slots; since the partition
/// and per-index work are independent of the worker count, results are
/// identical no matter how many threads run.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rds
