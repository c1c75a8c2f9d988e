// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "rds/flow.hpp"
#include "rds/geometry.hpp"
#include "rds/sample_path.hpp"
#include "rds/wrps.hpp"

namespace rds {

/// Point mass at the candidate's position on one realization's fiber.
struct FiberMeasure {
    const SamplePath* base_path = nullptr;
    Vec2 atom;
    double weight = 1.0;
};
FiberMeasure fiber_measure(const Wrps& wrps, double s, const SamplePath& omega);

struct MeasureAtom {
    Vec2 point;
    double weight = 0.0;
    int fiber = -1;  // index into fibers(), -1 when unlabeled
};

/// Weighted point cloud on the state space, optionally disintegrated over
/// the sampled realizations that generated it (fiber labels + stored
/// paths). Weights are positive and sum to 1.
class EmpiricalMeasure {
public:
    explicit EmpiricalMeasure(std::vector<MeasureAtom> atoms,
                              std::vector<SamplePath> fibers = {});

    const std::vector<MeasureAtom>& atoms() const { return atoms_; }
    const std::vector<SamplePath>& fibers() const { return fibers_; }
    double total_weight() const;

private:
    std::vector<MeasureAtom> atoms_;
    std::vector<SamplePath> fibers_;
};

using PathSampler = std::function<SamplePath(int index)>;

/// Time-averaged point-mass estimate of the invariant measure: draw
/// n_paths realizations, place n_time atoms per realization at
/// psi(s_j, w_i) with midpoints s_j = (j + 1/2) * T(w_i) / n_time over one
/// period, every atom weighted 1/(n_paths*n_time) and labeled with its
/// fiber. Fibers are processed independently (and possibly in parallel).
EmpiricalMeasure invariant_measure_estimate(const Wrps& wrps, const PathSampler& sampler,
                                            int n_paths, int n_time);

/// Push a fiber-labeled measure through the joint motion: each atom x on
/// fiber w moves to flow(t, w) x and the fiber becomes shift(w, t);
/// weights are unchanged.
EmpiricalMeasure pushforward(const FlowMap& flow, const EmpiricalMeasure& measure,
                             double t);

/// Energy distance between the state-space marginals: the square root of
/// 2 E||X-Y|| - E||X-X'|| - E||Y-Y'|| over weighted atoms (clamped at 0).
/// Summation order is canonicalized so the result is exactly symmetric in
/// its arguments and independent of the worker count.
double energy_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

/// Counterpart of verify_wrps at the measure level: pushes fiber point
/// masses through the joint motion and compares atom positions, plus the
/// period identity on fibers. Distances coincide with the trajectory
/// residuals because the fibers carry single atoms.
VerifyReport verify_wrpm(const Wrps& wrps, const FlowMap& flow, const SamplePath& omega,
                         const VerifyOptions& options);

}  // namespace rds
