// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rds/periodic.hpp"
#include "rds/rng.hpp"
#include "rds/sample_path.hpp"
#include "rds/wrps.hpp"

namespace rds {

/// How a period tag gets attached to Brownian or zero noise paths.
/// Values are snapped to the grid so period identities are knot-exact.
struct PeriodPolicy {
    enum class Kind { Constant, Uniform };
    Kind kind = Kind::Constant;
    double value = 3.2;  // Constant
    double lo = 2.5;     // Uniform
    double hi = 4.0;
};

struct RunConfig {
    std::string system = "sde-limit-cycle";
    std::uint64_t seed = 1;
    double dt = 1e-3;
    double window_lo = -26.0;
    double window_hi = 6.0;
    double tolerance = 1e-6;
    double alpha0 = 0.0;  // radians for random-ode, turns for sde-limit-cycle
    double rho0 = 0.5;
    std::string noise;  // brownian | zero | ensemble; default depends on system
    PeriodPolicy period;
    std::optional<std::vector<EnsembleMember>> ensemble;  // custom ensemble members
    double trunc_lo = -20.0;
    double horizon = 2.0;
    int samples = 200;
    std::string output_dir;  // empty -> $RDSLAB_OUT or "."

    void validate() const;                  // throws ConfigError
    std::string effective_noise() const;    // resolves the system default
    std::filesystem::path resolve_output_dir() const;
};

/// Parse a config file (JSON object; unknown keys rejected). Missing keys
/// keep their defaults.
RunConfig load_config_file(const std::filesystem::path& file);

/// Ensemble from config, or the built-in default.
PeriodicPathEnsemble config_ensemble(const RunConfig& config);

/// Draw one noise realization according to the config, period tag attached.
SamplePath make_noise_path(const RunConfig& config, RngStream& stream);

/// CLI exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Write the trajectory from (alpha0, rho0) over [0, t_end] as CSV rows
/// t,x,y,rho,alpha. Optionally dump the driving path (JSON envelope and/or
/// CSV).
int cmd_simulate(const RunConfig& config, double t_end,
                 const std::filesystem::path& out_csv,
                 const std::optional<std::filesystem::path>& dump_path_json,
                 const std::optional<std::filesystem::path>& dump_path_csv);

/// Run the residual suite (composition law, existence criterion, both
/// candidate identities at trajectory and measure level) and write a JSON
/// report; returns 0 iff every maximum is within config.tolerance.
int cmd_verify(const RunConfig& config, Corruption corruption,
               const std::filesystem::path& report_json);

/// Estimate the invariant measure, push it forward at each t, compare by
/// energy distance against a bootstrap noise floor, and write measure
/// JSON + marginal CSV + report JSON under out_prefix.
int cmd_measure(const RunConfig& config, int n_paths, int n_time,
                const std::vector<double>& t_list, int bootstrap,
                const std::string& out_prefix);

/// Re-emit a stored measure's marginal as plot-ready CSV.
int cmd_export_plot(const std::filesystem::path& measure_json,
                    const std::filesystem::path& out_csv);

Corruption parse_corruption(const std::string& name);  // "", period, radius, rate

}  // namespace rds
