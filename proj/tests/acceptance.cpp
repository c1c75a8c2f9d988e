// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// nonzero exit when anything fails. Tolerances are pinned here, not
// configurable.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rds/cli.hpp"
#include "rds/errors.hpp"
#include "rds/flows.hpp"
#include "rds/measures.hpp"
#include "rds/path_samplers.hpp"
#include "rds/radial_profile.hpp"
#include "rds/rng.hpp"
#include "rds/systems.hpp"
#include "rds/wrps.hpp"
#include "support/checks.hpp"

using namespace rds;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

SamplePath brownian(std::uint64_t stream_id, double lo, double hi, double dt,
                    double period) {
    RngStream s = RngStream(90210).derive(stream_id);
    return sample_two_sided_bm(s, lo, hi, dt).with_period(period);
}

SamplePath smooth(std::uint64_t stream_id, double lo, double hi, double dt) {
    RngStream s = RngStream(777).derive(stream_id);
    return sample_periodic(default_ensemble(), s, lo, hi, dt);
}

// ---------------------------------------------------------------------------
// 1. Composition law for both flows: 200 random (s, t, x) with
//    |s|, |t| <= 2 on a dt = 1e-3 grid, residual <= 1e-6, within 30 s.
void criterion_composition_law() {
    const auto start = std::chrono::steady_clock::now();
    CocycleOptions opts;
    opts.samples = 200;
    opts.horizon = 2.0;
    opts.seed = 1;

    const RandomOdeFlow ode;
    opts.state_sampler = default_state_sampler(ode.id());
    const SamplePath w_ode = smooth(0, -4.5, 4.5, 1e-3);
    const double r_ode = check_cocycle(ode, w_ode, opts).max_residual;

    const SdeLimitCycleFlow sde;
    opts.state_sampler = default_state_sampler(sde.id());
    const SamplePath w_sde = brownian(0, -4.5, 4.5, 1e-3, 3.2);
    const double r_sde = check_cocycle(sde, w_sde, opts).max_residual;

    const double elapsed = seconds_since(start);
    const bool pass = r_ode <= 1e-6 && r_sde <= 1e-6 && elapsed <= 30.0;
    report(1, "composition law, both flows, 200 triples",
           pass,
           "random-ode " + fmt(r_ode) + ", sde " + fmt(r_sde) + " <= 1e-6; " +
               fmt(elapsed) + " s");
}

// ---------------------------------------------------------------------------
// 2. Stationarity: rho(t, rho*(w), w) vs rho*(shift(w, t)) on 50 noise
//    paths, t in {0.5, 1, 2}, shared grid, relative error <= 1e-8.
void criterion_stationarity() {
    const double trunc = -38.0;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const SamplePath w = brownian(100 + i, -40.0, 3.0, 1e-3, 3.2);
        const double rho_star = stationary_radius(w, trunc).value;
        for (double t : {0.5, 1.0, 2.0}) {
            const double lhs = SdeLimitCycleFlow::advance_radius(t, w, rho_star);
            const double rhs = stationary_radius(w.shifted(t), trunc).value;
            worst = std::max(worst, std::fabs(lhs - rhs) / rhs);
        }
    }
    report(2, "stationary radius identity, 50 paths", worst <= 1e-8,
           "max rel err " + fmt(worst) + " <= 1e-8");
}

// ---------------------------------------------------------------------------
// 3. Candidate verification: smooth system on periodic ensembles at 1e-8,
//    sde system on noise at 1e-6, 200 sampled (s, t) each.
void criterion_verification() {
    VerifyOptions opts;
    opts.horizon = 2.0;

    const SystemBundle ode = make_system("random-ode", 0.7, -20.0);
    const Wrps w_ode = extend(ode.psi0, ode.period_of, *ode.flow);
    double ode_worst = 0.0;
    opts.samples = 50;
    for (std::uint64_t i = 0; i < 4; ++i) {
        opts.seed = 300 + i;
        const SamplePath path = smooth(10 + i, -8.0, 8.0, 1e-3);
        const VerifyReport r = verify_wrps(w_ode, *ode.flow, path, opts);
        ode_worst = std::max(ode_worst, std::max(r.max_equivariance_residual,
                                                 r.max_periodicity_residual));
    }

    const SystemBundle sde = make_system("sde-limit-cycle", 0.3, -26.0);
    const Wrps w_sde = extend(sde.psi0, sde.period_of, *sde.flow);
    double sde_worst = 0.0;
    opts.samples = 20;
    for (std::uint64_t i = 0; i < 10; ++i) {
        opts.seed = 400 + i;
        const SamplePath path = brownian(200 + i, -34.0, 7.0, 1e-3, 3.2);
        const VerifyReport r = verify_wrps(w_sde, *sde.flow, path, opts);
        sde_worst = std::max(sde_worst, std::max(r.max_equivariance_residual,
                                                 r.max_periodicity_residual));
    }

    const bool pass = ode_worst <= 1e-8 && sde_worst <= 1e-6;
    report(3, "candidate verification, 200 samples per system", pass,
           "random-ode " + fmt(ode_worst) + " <= 1e-8, sde " + fmt(sde_worst) +
               " <= 1e-6");
}

// ---------------------------------------------------------------------------
// 4. Criterion round trip: slice passes the existence criterion, and its
//    extension passes verification at the same tolerance, on both systems.
void criterion_round_trip() {
    VerifyOptions opts;
    opts.samples = 60;
    opts.horizon = 2.0;

    bool pass = true;
    std::string detail;
    struct Case {
        std::string id;
        double tol;
    };
    for (const auto& [id, tol] : {Case{"random-ode", 1e-8},
                                  Case{"sde-limit-cycle", 1e-6}}) {
        const double trunc = id == "random-ode" ? -20.0 : -26.0;
        const SystemBundle sys = make_system(id, 0.45, trunc);
        double crit = 0.0;
        double verify_worst = 0.0;
        const Wrps w = extend(sys.psi0, sys.period_of, *sys.flow);
        for (std::uint64_t i = 0; i < 5; ++i) {
            const SamplePath path = id == "random-ode"
                                        ? smooth(30 + i, -8.0, 8.0, 1e-3)
                                        : brownian(300 + i, -34.0, 7.0, 1e-3, 3.2);
            crit = std::max(crit,
                            check_criterion(*sys.flow, sys.psi0, sys.period_of, path));
            opts.seed = 500 + i;
            const VerifyReport r = verify_wrps(w, *sys.flow, path, opts);
            verify_worst = std::max(verify_worst, std::max(r.max_equivariance_residual,
                                                           r.max_periodicity_residual));
        }
        pass = pass && crit <= tol && verify_worst <= tol;
        detail += id + ": criterion " + fmt(crit) + ", extension " + fmt(verify_worst) +
                  " <= " + fmt(tol) + "; ";
    }
    report(4, "existence criterion round trip", pass, detail);
}

// ---------------------------------------------------------------------------
// 5. Falsification power: 10% defects in period, radius, or angular rate
//    push some residual above 0.05 (alpha0 = 0, sampled t past one period).
void criterion_falsification() {
    const SystemBundle sys = make_system("sde-limit-cycle", 0.0, -24.0);
    const Wrps honest = extend(sys.psi0, sys.period_of, *sys.flow);

    VerifyOptions opts;
    opts.samples = 40;
    opts.horizon = 3.5;  // period tag is 3.2

    bool pass = true;
    std::string detail;
    const char* names[] = {"period", "radius", "rate"};
    int name_idx = 0;
    for (Corruption kind :
         {Corruption::Period, Corruption::Radius, Corruption::AngularRate}) {
        const Wrps broken = corrupt_wrps(honest, kind);
        double worst = 0.0;
        for (std::uint64_t i = 0; i < 5; ++i) {
            opts.seed = 600 + i;
            const SamplePath path = brownian(400 + i, -34.0, 7.6, 1e-3, 3.2);
            const VerifyReport r = verify_wrps(broken, *sys.flow, path, opts);
            worst = std::max(worst, std::max(r.max_equivariance_residual,
                                             r.max_periodicity_residual));
        }
        pass = pass && worst > 0.05;
        detail += std::string(names[name_idx++]) + " " + fmt(worst) + " > 0.05; ";
    }
    report(5, "falsification of 10% defects", pass, detail);
}

// ---------------------------------------------------------------------------
// 6. Profile inversion: relative round-trip residual <= 1e-12 across
//    [sqrt(e), 1e30] in log space, and branch preservation on 1000 random
//    feasible radial transports.
void criterion_profile_inversion() {
    const double log_min = 0.5;
    const double log_max = 30.0 * std::log(10.0);
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double log_target =
            log_min + (log_max - log_min) * static_cast<double>(i) / 2000.0;
        for (Branch b : {Branch::Lower, Branch::Upper}) {
            const double rho = invert_radial_profile_log(log_target, b);
            const double rel = std::fabs(std::expm1(log_radial_profile(rho) - log_target));
            worst = std::max(worst, rel);
        }
    }

    RngStream stream(660);
    int preserved = 0;
    int ran = 0;
    while (ran < 1000) {
        const bool lower = stream.next_unit() < 0.5;
        const double rho0 = lower ? stream.next_uniform(0.02, 0.98)
                                  : std::exp(stream.next_uniform(0.01, 5.0));
        const double t_min =
            std::max(-2.0, kLogProfileMin - log_radial_profile(rho0) + 1e-6);
        if (t_min >= 2.0) continue;
        const double t = stream.next_uniform(t_min, 2.0);
        const double rho = RandomOdeFlow::advance_radius(t, rho0);
        ++ran;
        if ((rho0 < 1.0) == (rho < 1.0)) ++preserved;
    }

    const bool pass = worst <= 1e-12 && preserved == 1000;
    report(6, "profile inversion round trip and branch preservation", pass,
           "max rel residual " + fmt(worst) + " <= 1e-12, preserved " +
               std::to_string(preserved) + "/1000");
}

// ---------------------------------------------------------------------------
// 7. Invariant measure: 200 paths x 64 atoms, pushforwards at t in
//    {0.3, 1.0} within 2x the 20-replicate bootstrap noise floor; every
//    atom within 1e-6 of its fiber circle; under 2 minutes.
void criterion_invariant_measure() {
    const auto start = std::chrono::steady_clock::now();
    const double dt = 0.0125;
    const double trunc = -30.0;
    const double period = 3.2;
    const SystemBundle sys = make_system("sde-limit-cycle", 0.0, trunc);
    const Wrps w = extend(sys.psi0, sys.period_of, *sys.flow);

    const auto sampler_for = [&](std::uint64_t salt) {
        return [salt, dt, period](int index) {
            RngStream s =
                RngStream(7000).derive(salt).derive(static_cast<std::uint64_t>(index));
            return sample_two_sided_bm(s, -34.0, 3.5, dt).with_period(period);
        };
    };

    const EmpiricalMeasure base = invariant_measure_estimate(w, sampler_for(0), 200, 64);

    double support_worst = 0.0;
    std::vector<double> fiber_radius(base.fibers().size());
    for (std::size_t i = 0; i < base.fibers().size(); ++i) {
        fiber_radius[i] = stationary_radius(base.fibers()[i], trunc).value;
    }
    for (const MeasureAtom& a : base.atoms()) {
        support_worst =
            std::max(support_worst,
                     std::fabs(a.point.norm() - fiber_radius[static_cast<std::size_t>(a.fiber)]));
    }

    double moved_worst = 0.0;
    for (double t : {0.3, 1.0}) {
        const EmpiricalMeasure pushed = pushforward(*sys.flow, base, t);
        moved_worst = std::max(moved_worst, energy_distance(base, pushed));
    }

    double floor = 0.0;
    const int replicates = 20;
    for (int r = 0; r < replicates; ++r) {
        const EmpiricalMeasure a = invariant_measure_estimate(
            w, sampler_for(1000 + 2 * static_cast<std::uint64_t>(r)), 200, 64);
        const EmpiricalMeasure b = invariant_measure_estimate(
            w, sampler_for(1001 + 2 * static_cast<std::uint64_t>(r)), 200, 64);
        floor += energy_distance(a, b);
    }
    floor /= replicates;

    const double elapsed = seconds_since(start);
    const bool pass =
        moved_worst <= 2.0 * floor && support_worst <= 1e-6 && elapsed <= 120.0;
    report(7, "invariant measure estimate, 200x64", pass,
           "max distance " + fmt(moved_worst) + " <= 2x floor " + fmt(floor) +
               ", support err " + fmt(support_worst) + " <= 1e-6, " + fmt(elapsed) +
               " s");
}

// ---------------------------------------------------------------------------
// 8. Running maxima around t1 = 1, t2 = 2 on 1e4 paths: forward max is
//    half-normal with scale sqrt(t2 - t1) (KS at 1%), and the backward and
//    forward maxima are uncorrelated (|corr| <= 0.05).
void criterion_running_max() {
    const int n = 10000;
    std::vector<double> m1(n), m2(n);
    RngStream base(8600);
    for (int i = 0; i < n; ++i) {
        RngStream s = base.derive(static_cast<std::uint64_t>(i));
        const SamplePath w = sample_two_sided_bm(s, -0.01, 2.0, 1e-4);
        const RunningMaxStats rm = running_max_stats(w, 1.0, 2.0);
        m1[static_cast<std::size_t>(i)] = rm.backward_max;
        m2[static_cast<std::size_t>(i)] = rm.forward_max;
    }
    const double p = checks::ks_test_pvalue(
        m2, [](double x) { return checks::half_normal_cdf(x, 1.0); });
    const double corr = checks::pearson_correlation(m1, m2);
    const bool pass = p >= 0.01 && std::fabs(corr) <= 0.05;
    report(8, "running-maximum law and independence, 1e4 paths", pass,
           "KS p " + fmt(p) + " >= 0.01, |corr| " + fmt(std::fabs(corr)) + " <= 0.05");
}

// ---------------------------------------------------------------------------
// 9. CLI determinism: byte-identical outputs across reruns and across
//    worker counts, for every subcommand.
#ifndef RDSLAB_BIN
#define RDSLAB_BIN "rdslab"
#endif

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return "<missing:" + file.string() + ">";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& threads, const std::string& args) {
    const std::string cmd =
        "RDSLAB_THREADS=" + threads + " " + RDSLAB_BIN + " " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
}

void criterion_cli_determinism() {
    const fs::path root = fs::temp_directory_path() / "rds_acceptance_cli";
    fs::remove_all(root);
    fs::create_directories(root);

    struct Run {
        std::string name;
        std::string args;  // without --output-dir
        std::vector<std::string> files;
    };
    const std::vector<Run> runs = {
        {"simulate",
         "simulate --seed 5 --dt 0.001 --window -4 4 --trunc-lo -4 --t-end 1.5 "
         "--out traj.csv --dump-path path.json",
         {"traj.csv", "path.json"}},
        {"verify",
         "verify --seed 5 --samples 20 --horizon 1.5 --report report.json",
         {"report.json"}},
        {"measure",
         "measure --seed 5 --dt 0.0125 --window -26 3.5 --trunc-lo -20 --n-paths 10 "
         "--n-time 8 --t-list 0.2 --bootstrap 2 --out-prefix m",
         {"m_measure.json", "m_marginal.csv", "m_report.json"}},
    };

    // export-plot consumes the measure run's output; checked separately.

    bool pass = true;
    std::string detail;
    for (const Run& run : runs) {
        const fs::path dir_a = root / (run.name + "_a");
        const fs::path dir_b = root / (run.name + "_b");
        const fs::path dir_c = root / (run.name + "_c");
        const int ra = run_cli("1", run.args + " --output-dir " + dir_a.string());
        const int rb = run_cli("1", run.args + " --output-dir " + dir_b.string());
        const int rc = run_cli("3", run.args + " --output-dir " + dir_c.string());
        bool same = ra == 0 && rb == 0 && rc == 0;
        for (const std::string& f : run.files) {
            same = same && slurp(dir_a / f) == slurp(dir_b / f) &&
                   slurp(dir_a / f) == slurp(dir_c / f);
        }
        pass = pass && same;
        detail += run.name + (same ? " ok; " : " MISMATCH; ");
    }
    {
        const fs::path measure_json = root / "measure_a" / "m_measure.json";
        const fs::path plot_a = root / "plot_a.csv";
        const fs::path plot_b = root / "plot_b.csv";
        const int ra = run_cli("1", "export-plot --measure " + measure_json.string() +
                                        " --out " + plot_a.string());
        const int rb = run_cli("3", "export-plot --measure " + measure_json.string() +
                                        " --out " + plot_b.string());
        const bool same = ra == 0 && rb == 0 && slurp(plot_a) == slurp(plot_b) &&
                          slurp(plot_a) == slurp(root / "measure_a" / "m_marginal.csv");
        pass = pass && same;
        detail += std::string("export-plot") + (same ? " ok; " : " MISMATCH; ");
    }
    report(9, "CLI determinism across reruns and worker counts", pass, detail);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_composition_law();
    criterion_stationarity();
    criterion_verification();
    criterion_round_trip();
    criterion_falsification();
    criterion_profile_inversion();
    criterion_invariant_measure();
    criterion_running_max();
    criterion_cli_determinism();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
