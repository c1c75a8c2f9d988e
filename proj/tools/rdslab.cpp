// SPDX-License-Identifier: Apache-2.0
//
// rdslab: simulate noise-driven planar flows with closed-form solutions,
// verify weak random periodic solution candidates, and estimate invariant
// measures by time-averaged Monte Carlo.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rds/cli.hpp"
#include "rds/errors.hpp"

namespace {

struct CommonFlags {
    std::string config_file;
    std::optional<std::string> system;
    std::optional<std::uint64_t> seed;
    std::optional<double> dt;
    std::optional<std::vector<double>> window;
    std::optional<double> tolerance;
    std::optional<double> alpha0;
    std::optional<double> rho0;
    std::optional<std::string> noise;
    std::optional<double> period;
    std::optional<double> trunc_lo;
    std::optional<double> horizon;
    std::optional<int> samples;
    std::optional<std::string> output_dir;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_file, "JSON config file (flags override it)");
    cmd->add_option("--system", f.system, "random-ode | sde-limit-cycle");
    cmd->add_option("--seed", f.seed, "master seed");
    cmd->add_option("--dt", f.dt, "grid step");
    cmd->add_option("--window", f.window, "path window: lo hi")->expected(2);
    cmd->add_option("--tolerance", f.tolerance, "residual tolerance");
    cmd->add_option("--alpha0", f.alpha0, "initial angle (radians or turns per system)");
    cmd->add_option("--rho0", f.rho0, "initial radius");
    cmd->add_option("--noise", f.noise, "brownian | zero | ensemble");
    cmd->add_option("--period", f.period, "constant period tag for brownian/zero noise");
    cmd->add_option("--trunc-lo", f.trunc_lo, "stationary-radius truncation time");
    cmd->add_option("--horizon", f.horizon, "|s|,|t| range for sampled identities");
    cmd->add_option("--samples", f.samples, "sample count for the residual suite");
    cmd->add_option("--output-dir", f.output_dir, "output directory (or $RDSLAB_OUT)");
}

rds::RunConfig build_config(const CommonFlags& f) {
    rds::RunConfig cfg;
    if (!f.config_file.empty()) cfg = rds::load_config_file(f.config_file);
    if (f.system) cfg.system = *f.system;
    if (f.seed) cfg.seed = *f.seed;
    if (f.dt) cfg.dt = *f.dt;
    if (f.window) {
        if (f.window->size() != 2) throw rds::ConfigError("--window needs lo hi");
        cfg.window_lo = (*f.window)[0];
        cfg.window_hi = (*f.window)[1];
    }
    if (f.tolerance) cfg.tolerance = *f.tolerance;
    if (f.alpha0) cfg.alpha0 = *f.alpha0;
    if (f.rho0) cfg.rho0 = *f.rho0;
    if (f.noise) cfg.noise = *f.noise;
    if (f.period) {
        cfg.period.kind = rds::PeriodPolicy::Kind::Constant;
        cfg.period.value = *f.period;
    }
    if (f.trunc_lo) cfg.trunc_lo = *f.trunc_lo;
    if (f.horizon) cfg.horizon = *f.horizon;
    if (f.samples) cfg.samples = *f.samples;
    if (f.output_dir) cfg.output_dir = *f.output_dir;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random periodic structure laboratory for noise-driven planar flows"};
    app.require_subcommand(1);

    CommonFlags sim_flags;
    double t_end = 2.0;
    std::string sim_out = "trajectory.csv";
    std::string dump_path_json;
    std::string dump_path_csv;
    CLI::App* sim = app.add_subcommand("simulate", "write a trajectory CSV");
    add_common_flags(sim, sim_flags);
    sim->add_option("--t-end", t_end, "trajectory horizon");
    sim->add_option("--out", sim_out, "output CSV file");
    sim->add_option("--dump-path", dump_path_json, "also write the driving path (JSON)");
    sim->add_option("--dump-path-csv", dump_path_csv, "also write the driving path (CSV)");

    CommonFlags ver_flags;
    std::string corrupt;
    std::string report = "verify_report.json";
    CLI::App* ver = app.add_subcommand("verify", "run the residual suite");
    add_common_flags(ver, ver_flags);
    ver->add_option("--corrupt", corrupt, "debug defect: none | period | radius | rate");
    ver->add_option("--report", report, "report JSON file");

    CommonFlags mea_flags;
    int n_paths = 200;
    int n_time = 64;
    int bootstrap = 20;
    std::vector<double> t_list{0.3, 1.0};
    std::string prefix = "measure";
    CLI::App* mea = app.add_subcommand("measure", "estimate the invariant measure");
    add_common_flags(mea, mea_flags);
    mea->add_option("--n-paths", n_paths, "number of sampled realizations");
    mea->add_option("--n-time", n_time, "atoms per realization period");
    mea->add_option("--t-list", t_list, "pushforward times");
    mea->add_option("--bootstrap", bootstrap, "noise-floor replicates");
    mea->add_option("--out-prefix", prefix, "output file prefix");

    std::string plot_in;
    std::string plot_out = "marginal.csv";
    CLI::App* plot = app.add_subcommand("export-plot", "measure JSON -> marginal CSV");
    plot->add_option("--measure", plot_in, "measure JSON file")->required();
    plot->add_option("--out", plot_out, "output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? rds::kExitOk : rds::kExitConfig;
    }

    try {
        if (sim->parsed()) {
            const rds::RunConfig cfg = build_config(sim_flags);
            const auto dir = cfg.resolve_output_dir();
            std::filesystem::create_directories(dir);
            return rds::cmd_simulate(
                cfg, t_end, dir / sim_out,
                dump_path_json.empty()
                    ? std::nullopt
                    : std::optional<std::filesystem::path>(dir / dump_path_json),
                dump_path_csv.empty()
                    ? std::nullopt
                    : std::optional<std::filesystem::path>(dir / dump_path_csv));
        }
        if (ver->parsed()) {
            const rds::RunConfig cfg = build_config(ver_flags);
            const auto dir = cfg.resolve_output_dir();
            std::filesystem::create_directories(dir);
            return rds::cmd_verify(cfg, rds::parse_corruption(corrupt), dir / report);
        }
        if (mea->parsed()) {
            const rds::RunConfig cfg = build_config(mea_flags);
            return rds::cmd_measure(cfg, n_paths, n_time, t_list, bootstrap, prefix);
        }
        if (plot->parsed()) {
            return rds::cmd_export_plot(plot_in, plot_out);
        }
    } catch (const rds::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return rds::kExitConfig;
    } catch (const rds::WindowError& e) {
        std::cerr << "config error (window too small): " << e.what() << "\n";
        return rds::kExitConfig;
    } catch (const rds::FlowDomainError& e) {
        std::cerr << "config error (flow domain): " << e.what() << "\n";
        return rds::kExitConfig;
    } catch (const rds::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return rds::kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return rds::kExitConfig;
    }
    return rds::kExitConfig;
}
