// SPDX-License-Identifier: Apache-2.0
#include "rds/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rds/errors.hpp"
#include "rds/parallel.hpp"
#include "rds/rng.hpp"

namespace rds {

EmpiricalMeasure::EmpiricalMeasure(std::vector<MeasureAtom> atoms,
                                   std::vector<SamplePath> fibers)
    : atoms_(std::move(atoms)), fibers_(std::move(fibers)) {
    if (atoms_.empty()) {
        throw std::invalid_argument("EmpiricalMeasure: no atoms");
    }
    double total = 0.0;
    for (const MeasureAtom& a : atoms_) {
        if (!(a.weight > 0.0)) {
            throw std::invalid_argument("EmpiricalMeasure: weights must be positive");
        }
        if (a.fiber >= static_cast<int>(fibers_.size())) {
            throw std::invalid_argument("EmpiricalMeasure: fiber label out of range");
        }
        total += a.weight;
    }
    if (std::fabs(total - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "EmpiricalMeasure: weights sum to " << total << ", expected 1";
        throw std::invalid_argument(msg.str());
    }
}

double EmpiricalMeasure::total_weight() const {
    double total = 0.0;
    for (const MeasureAtom& a : atoms_) total += a.weight;
    return total;
}

FiberMeasure fiber_measure(const Wrps& wrps, double s, const SamplePath& omega) {
    return {&omega, wrps.psi(s, omega), 1.0};
}

EmpiricalMeasure invariant_measure_estimate(const Wrps& wrps, const PathSampler& sampler,
                                            int n_paths, int n_time) {
    if (n_paths < 1) throw std::invalid_argument("invariant_measure_estimate: n_paths >= 1");
    if (n_time < 2) throw std::invalid_argument("invariant_measure_estimate: n_time >= 2");

    const std::size_t np = static_cast<std::size_t>(n_paths);
    const std::size_t nt = static_cast<std::size_t>(n_time);
    const double weight = 1.0 / (static_cast<double>(np) * static_cast<double>(nt));

    std::vector<SamplePath> fibers;
    fibers.reserve(np);
    for (std::size_t i = 0; i < np; ++i) {
        fibers.push_back(sampler(static_cast<int>(i)));
    }

    std::vector<MeasureAtom> atoms(np * nt);
    parallel_for(np, [&](std::size_t i) {
        const SamplePath& omega = fibers[i];
        const double period = wrps.period_of(omega);
        for (std::size_t j = 0; j < nt; ++j) {
            const double s =
                (static_cast<double>(j) + 0.5) * period / static_cast<double>(nt);
            atoms[i * nt + j] = {wrps.psi(s, omega), weight, static_cast<int>(i)};
        }
    });
    return EmpiricalMeasure(std::move(atoms), std::move(fibers));
}

EmpiricalMeasure pushforward(const FlowMap& flow, const EmpiricalMeasure& measure,
                             double t) {
    if (measure.fibers().empty()) {
        throw std::invalid_argument("pushforward: measure carries no fiber paths");
    }
    std::vector<SamplePath> fibers;
    fibers.reserve(measure.fibers().size());
    for (const SamplePath& omega : measure.fibers()) {
        fibers.push_back(omega.shifted(t));
    }
    for (const MeasureAtom& a : measure.atoms()) {
        if (a.fiber < 0) throw std::invalid_argument("pushforward: unlabeled atom");
    }
    std::vector<MeasureAtom> atoms(measure.atoms().size());
    parallel_for(atoms.size(), [&](std::size_t k) {
        const MeasureAtom& a = measure.atoms()[k];
        const SamplePath& omega = measure.fibers()[static_cast<std::size_t>(a.fiber)];
        atoms[k] = {flow.evaluate(t, omega, a.point), a.weight, a.fiber};
    });
    return EmpiricalMeasure(std::move(atoms), std::move(fibers));
}

namespace {

// Mean pairwise distance, sum_ij u_i v_j ||x_i - y_j||, with a fixed
// row-major summation order: rows are accumulated independently and then
// reduced in index order, so the value does not depend on worker count.
double mean_cross_distance(const std::vector<MeasureAtom>& xs,
                           const std::vector<MeasureAtom>& ys) {
    std::vector<double> row(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        const Vec2 p = xs[i].point;
        double acc = 0.0;
        for (const MeasureAtom& b : ys) {
            const double dx = p.x - b.point.x;
            const double dy = p.y - b.point.y;
            acc += b.weight * std::sqrt(dx * dx + dy * dy);
        }
        row[i] = xs[i].weight * acc;
    });
    double total = 0.0;
    for (double r : row) total += r;
    return total;
}

// Lexicographic comparison of atom clouds, used only to pick a canonical
// argument order so energy_distance(a, b) == energy_distance(b, a) bitwise.
bool cloud_less(const std::vector<MeasureAtom>& a, const std::vector<MeasureAtom>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].point.x != b[i].point.x) return a[i].point.x < b[i].point.x;
        if (a[i].point.y != b[i].point.y) return a[i].point.y < b[i].point.y;
        if (a[i].weight != b[i].weight) return a[i].weight < b[i].weight;
    }
    return false;
}

}  // namespace

double energy_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b) {
    const std::vector<MeasureAtom>* first = &a.atoms();
    const std::vector<MeasureAtom>* second = &b.atoms();
    if (cloud_less(*first, *second)) std::swap(first, second);
    const double cross = mean_cross_distance(*first, *second);
    const double self_a = mean_cross_distance(*first, *first);
    const double self_b = mean_cross_distance(*second, *second);
    const double squared = 2.0 * cross - self_a - self_b;
    return std::sqrt(std::max(0.0, squared));
}

VerifyReport verify_wrpm(const Wrps& wrps, const FlowMap& flow, const SamplePath& omega,
                         const VerifyOptions& options) {
    RngStream stream(options.seed, 0x4D51);
    const double dt = omega.dt();
    const auto draw_grid_time = [&]() {
        const double raw = stream.next_uniform(-options.horizon, options.horizon);
        return std::round(raw / dt) * dt;
    };

    VerifyReport report;
    for (int i = 0; i < options.samples; ++i) {
        const double s = draw_grid_time();
        const double t = draw_grid_time();
        try {
            // Fiber point mass through the joint motion vs. the fiber
            // point mass of the moved time/realization.
            const FiberMeasure nu = fiber_measure(wrps, s, omega);
            const SkewProductResult moved = skew_product(flow, t, omega, nu.atom);
            const FiberMeasure target = fiber_measure(wrps, t + s, moved.path);
            const double r_eq = distance(moved.state, target.atom);
            if (r_eq > report.max_equivariance_residual) {
                report.max_equivariance_residual = r_eq;
                report.equivariance_witness = {s, t, moved.state, target.atom, r_eq};
            }

            const double period = wrps.period_of(omega.shifted(-s));
            const FiberMeasure advanced = fiber_measure(wrps, s + period, omega);
            const double r_per = distance(advanced.atom, nu.atom);
            if (r_per > report.max_periodicity_residual) {
                report.max_periodicity_residual = r_per;
                report.periodicity_witness = {s, t, advanced.atom, nu.atom, r_per};
            }
            ++report.samples_run;
        } catch (const WindowError&) {
            ++report.samples_skipped;
        } catch (const FlowDomainError&) {
            ++report.samples_skipped;
        }
    }
    return report;
}

}  // namespace rds
