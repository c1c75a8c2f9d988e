// SPDX-License-Identifier: Apache-2.0
#include "rds/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

#include <json.hpp>

#include "rds/errors.hpp"
#include "rds/flows.hpp"
#include "rds/measures.hpp"
#include "rds/path_samplers.hpp"
#include "rds/serialize.hpp"
#include "rds/systems.hpp"

namespace rds {
namespace {

using nlohmann::ordered_json;

double snap_to_grid(double value, double dt) {
    const double snapped = std::round(value / dt) * dt;
    return snapped > 0.0 ? snapped : dt;
}

ordered_json witness_json(const Witness& w) {
    return {{"s", w.s},
            {"t", w.t},
            {"lhs", {w.lhs.x, w.lhs.y}},
            {"rhs", {w.rhs.x, w.rhs.y}},
            {"residual", w.residual}};
}

ordered_json report_json(const VerifyReport& r) {
    return {{"max_equivariance_residual", r.max_equivariance_residual},
            {"max_periodicity_residual", r.max_periodicity_residual},
            {"samples_run", r.samples_run},
            {"samples_skipped", r.samples_skipped},
            {"witnesses",
             {{"equivariance", witness_json(r.equivariance_witness)},
              {"periodicity", witness_json(r.periodicity_witness)}}}};
}

void write_json(const ordered_json& j, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot open for writing: " + file.string());
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace

void RunConfig::validate() const {
    if (system != "random-ode" && system != "sde-limit-cycle") {
        throw ConfigError("system must be random-ode or sde-limit-cycle");
    }
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(window_lo < 0.0 && window_hi > 0.0)) {
        throw ConfigError("window must straddle 0 (window_lo < 0 < window_hi)");
    }
    if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    if (!(rho0 >= 0.0)) throw ConfigError("rho0 must be nonnegative");
    const std::string n = effective_noise();
    if (n != "brownian" && n != "zero" && n != "ensemble") {
        throw ConfigError("noise must be brownian, zero, or ensemble");
    }
    if (period.kind == PeriodPolicy::Kind::Constant) {
        if (!(period.value > 0.0)) throw ConfigError("period value must be positive");
    } else {
        if (!(period.lo > 0.0 && period.hi >= period.lo)) {
            throw ConfigError("period range must satisfy 0 < lo <= hi");
        }
    }
    if (!(trunc_lo < 0.0)) throw ConfigError("trunc_lo must be negative");
    // Only the sde system integrates back to trunc_lo.
    if (system == "sde-limit-cycle" && trunc_lo < window_lo) {
        throw ConfigError("trunc_lo must not precede window_lo");
    }
    if (!(horizon > 0.0)) throw ConfigError("horizon must be positive");
    if (samples < 1) throw ConfigError("samples must be >= 1");
}

std::string RunConfig::effective_noise() const {
    if (!noise.empty()) return noise;
    return system == "random-ode" ? "ensemble" : "brownian";
}

std::filesystem::path RunConfig::resolve_output_dir() const {
    if (!output_dir.empty()) return output_dir;
    if (const char* env = std::getenv("RDSLAB_OUT")) return env;
    return ".";
}

RunConfig load_config_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config: " + file.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }

    static const std::set<std::string> known = {
        "system", "seed",    "dt",      "window",   "tolerance", "alpha0",
        "rho0",   "noise",   "period",  "ensemble", "trunc_lo",  "horizon",
        "samples", "output_dir"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) {
            throw ConfigError("unknown config key: " + item.key());
        }
    }

    RunConfig cfg;
    try {
        if (j.contains("system")) cfg.system = j["system"].get<std::string>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
        if (j.contains("window")) {
            const auto w = j["window"].get<std::vector<double>>();
            if (w.size() != 2) throw ConfigError("window must be [lo, hi]");
            cfg.window_lo = w[0];
            cfg.window_hi = w[1];
        }
        if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
        if (j.contains("alpha0")) cfg.alpha0 = j["alpha0"].get<double>();
        if (j.contains("rho0")) cfg.rho0 = j["rho0"].get<double>();
        if (j.contains("noise")) cfg.noise = j["noise"].get<std::string>();
        if (j.contains("period")) {
            const auto& p = j["period"];
            const std::string type = p.at("type").get<std::string>();
            if (type == "constant") {
                cfg.period.kind = PeriodPolicy::Kind::Constant;
                cfg.period.value = p.at("value").get<double>();
            } else if (type == "uniform") {
                cfg.period.kind = PeriodPolicy::Kind::Uniform;
                cfg.period.lo = p.at("lo").get<double>();
                cfg.period.hi = p.at("hi").get<double>();
            } else {
                throw ConfigError("period.type must be constant or uniform");
            }
        }
        if (j.contains("ensemble")) {
            std::vector<EnsembleMember> members;
            for (const auto& m : j["ensemble"].at("members")) {
                std::vector<Harmonic> harmonics;
                for (const auto& h : m.at("harmonics")) {
                    harmonics.push_back({h.at("order").get<int>(),
                                         h.value("sin", 0.0), h.value("cos", 0.0)});
                }
                members.push_back({PeriodicWaveform(m.at("period").get<double>(),
                                                    std::move(harmonics)),
                                   m.at("weight").get<double>()});
            }
            cfg.ensemble = std::move(members);
        }
        if (j.contains("trunc_lo")) cfg.trunc_lo = j["trunc_lo"].get<double>();
        if (j.contains("horizon")) cfg.horizon = j["horizon"].get<double>();
        if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
        if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    return cfg;
}

PeriodicPathEnsemble config_ensemble(const RunConfig& config) {
    if (config.ensemble) return PeriodicPathEnsemble(*config.ensemble);
    return default_ensemble();
}

SamplePath make_noise_path(const RunConfig& config, RngStream& stream) {
    const std::string noise = config.effective_noise();
    if (noise == "ensemble") {
        return sample_periodic(config_ensemble(config), stream, config.window_lo,
                               config.window_hi, config.dt);
    }
    SamplePath path = noise == "zero"
                          ? zero_path(config.window_lo, config.window_hi, config.dt)
                          : sample_two_sided_bm(stream, config.window_lo,
                                                config.window_hi, config.dt);
    double period = config.period.value;
    if (config.period.kind == PeriodPolicy::Kind::Uniform) {
        period = stream.next_uniform(config.period.lo, config.period.hi);
    }
    return path.with_period(snap_to_grid(period, config.dt));
}

int cmd_simulate(const RunConfig& config, double t_end,
                 const std::filesystem::path& out_csv,
                 const std::optional<std::filesystem::path>& dump_path_json,
                 const std::optional<std::filesystem::path>& dump_path_csv) {
    config.validate();
    if (!(t_end > 0.0)) throw ConfigError("t-end must be positive");
    if (t_end > config.window_hi) {
        throw ConfigError("t-end exceeds the path window");
    }
    RngStream stream(config.seed);
    const SamplePath path = make_noise_path(config, stream);
    const SystemBundle bundle = make_system(config.system, config.alpha0, config.trunc_lo);
    const bool turns = config.system == "sde-limit-cycle";
    const Vec2 x0 = turns ? from_polar_turns({config.alpha0, config.rho0})
                          : from_polar_radians({config.alpha0, config.rho0});

    std::ofstream out(out_csv);
    if (!out) throw IoError("cannot open for writing: " + out_csv.string());
    out << "t,x,y,rho,alpha\n";
    const long steps = std::lround(t_end / config.dt);
    for (long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * config.dt;
        const Vec2 p = bundle.flow->evaluate(t, path, x0);
        const double rho = p.norm();
        const double alpha = turns ? to_polar_turns(p).alpha : to_polar_radians(p).alpha;
        out << format_double(t) << "," << format_double(p.x) << "," << format_double(p.y)
            << "," << format_double(rho) << "," << format_double(alpha) << "\n";
    }
    if (!out) throw IoError("write failed: " + out_csv.string());

    if (dump_path_json) save_path_json(path, *dump_path_json);
    if (dump_path_csv) save_path_csv(path, *dump_path_csv);
    return kExitOk;
}

int cmd_verify(const RunConfig& config, Corruption corruption,
               const std::filesystem::path& report_json_path) {
    config.validate();
    const SystemBundle bundle = make_system(config.system, config.alpha0, config.trunc_lo);

    StateFunctional psi0 = bundle.psi0;
    PeriodFunctional period_of = bundle.period_of;
    if (corruption == Corruption::Radius) {
        psi0 = [inner = bundle.psi0](const SamplePath& w) { return 1.1 * inner(w); };
    } else if (corruption == Corruption::Period) {
        period_of = [inner = bundle.period_of](const SamplePath& w) {
            return 1.1 * inner(w);
        };
    }
    Wrps wrps = extend(psi0, period_of, *bundle.flow);
    if (corruption == Corruption::AngularRate) {
        wrps = corrupt_wrps(wrps, Corruption::AngularRate);
    }

    constexpr int kPaths = 5;
    const int per_path = (config.samples + kPaths - 1) / kPaths;

    CocycleReport cocycle_worst;
    double criterion_max = 0.0;
    VerifyReport wrps_worst;
    VerifyReport wrpm_worst;
    RngStream base(config.seed);
    for (int i = 0; i < kPaths; ++i) {
        RngStream stream = base.derive(static_cast<std::uint64_t>(i));
        const SamplePath path = make_noise_path(config, stream);

        CocycleOptions copt;
        copt.samples = per_path;
        copt.horizon = config.horizon;
        copt.seed = config.seed + static_cast<std::uint64_t>(i);
        copt.state_sampler = default_state_sampler(bundle.flow->id());
        const CocycleReport cr = check_cocycle(*bundle.flow, path, copt);
        if (cr.max_residual >= cocycle_worst.max_residual) {
            cocycle_worst.max_residual = cr.max_residual;
            cocycle_worst.worst_s = cr.worst_s;
            cocycle_worst.worst_t = cr.worst_t;
            cocycle_worst.worst_x = cr.worst_x;
        }
        cocycle_worst.samples_run += cr.samples_run;
        cocycle_worst.samples_rejected += cr.samples_rejected;

        criterion_max =
            std::max(criterion_max, check_criterion(*bundle.flow, psi0, period_of, path));

        VerifyOptions vopt;
        vopt.samples = per_path;
        vopt.horizon = config.horizon;
        vopt.seed = config.seed + static_cast<std::uint64_t>(i);
        const VerifyReport vr = verify_wrps(wrps, *bundle.flow, path, vopt);
        if (vr.max_equivariance_residual >= wrps_worst.max_equivariance_residual) {
            wrps_worst.max_equivariance_residual = vr.max_equivariance_residual;
            wrps_worst.equivariance_witness = vr.equivariance_witness;
        }
        if (vr.max_periodicity_residual >= wrps_worst.max_periodicity_residual) {
            wrps_worst.max_periodicity_residual = vr.max_periodicity_residual;
            wrps_worst.periodicity_witness = vr.periodicity_witness;
        }
        wrps_worst.samples_run += vr.samples_run;
        wrps_worst.samples_skipped += vr.samples_skipped;

        const VerifyReport mr = verify_wrpm(wrps, *bundle.flow, path, vopt);
        if (mr.max_equivariance_residual >= wrpm_worst.max_equivariance_residual) {
            wrpm_worst.max_equivariance_residual = mr.max_equivariance_residual;
            wrpm_worst.equivariance_witness = mr.equivariance_witness;
        }
        if (mr.max_periodicity_residual >= wrpm_worst.max_periodicity_residual) {
            wrpm_worst.max_periodicity_residual = mr.max_periodicity_residual;
            wrpm_worst.periodicity_witness = mr.periodicity_witness;
        }
        wrpm_worst.samples_run += mr.samples_run;
        wrpm_worst.samples_skipped += mr.samples_skipped;
    }

    const bool pass = cocycle_worst.max_residual <= config.tolerance &&
                      criterion_max <= config.tolerance &&
                      wrps_worst.samples_run > 0 && wrps_worst.within(config.tolerance) &&
                      wrpm_worst.samples_run > 0 && wrpm_worst.within(config.tolerance);

    ordered_json j;
    j["system"] = config.system;
    j["seed"] = config.seed;
    j["samples"] = config.samples;
    j["tolerance"] = config.tolerance;
    j["corruption"] = corruption == Corruption::None     ? "none"
                      : corruption == Corruption::Period ? "period"
                      : corruption == Corruption::Radius ? "radius"
                                                         : "rate";
    j["cocycle"] = {{"max_residual", cocycle_worst.max_residual},
                    {"samples_run", cocycle_worst.samples_run},
                    {"samples_rejected", cocycle_worst.samples_rejected}};
    j["criterion"] = {{"max_residual", criterion_max}};
    j["wrps"] = report_json(wrps_worst);
    j["wrpm"] = report_json(wrpm_worst);
    j["pass"] = pass;
    write_json(j, report_json_path);
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_measure(const RunConfig& config, int n_paths, int n_time,
                const std::vector<double>& t_list, int bootstrap,
                const std::string& out_prefix) {
    config.validate();
    if (n_paths < 1 || n_time < 2) throw ConfigError("need n-paths >= 1 and n-time >= 2");
    if (bootstrap < 0) throw ConfigError("bootstrap must be >= 0");
    const SystemBundle bundle = make_system(config.system, config.alpha0, config.trunc_lo);
    const Wrps wrps = extend(bundle.psi0, bundle.period_of, *bundle.flow);

    const auto sampler_for = [&](std::uint64_t salt) {
        return [&config, salt](int index) {
            RngStream stream =
                RngStream(config.seed).derive(salt).derive(static_cast<std::uint64_t>(index));
            return make_noise_path(config, stream);
        };
    };

    const EmpiricalMeasure base =
        invariant_measure_estimate(wrps, sampler_for(0), n_paths, n_time);

    ordered_json distances = ordered_json::array();
    double worst_distance = 0.0;
    for (double t : t_list) {
        const EmpiricalMeasure pushed = pushforward(*bundle.flow, base, t);
        const double ed = energy_distance(base, pushed);
        distances.push_back({{"t", t}, {"energy_distance", ed}});
        worst_distance = std::max(worst_distance, ed);
    }

    double noise_floor = 0.0;
    if (bootstrap > 0) {
        for (int r = 0; r < bootstrap; ++r) {
            const EmpiricalMeasure a = invariant_measure_estimate(
                wrps, sampler_for(1000 + 2 * static_cast<std::uint64_t>(r)), n_paths,
                n_time);
            const EmpiricalMeasure b = invariant_measure_estimate(
                wrps, sampler_for(1001 + 2 * static_cast<std::uint64_t>(r)), n_paths,
                n_time);
            noise_floor += energy_distance(a, b);
        }
        noise_floor /= static_cast<double>(bootstrap);
    }

    const bool pass = bootstrap == 0 || worst_distance <= 2.0 * noise_floor;

    const std::filesystem::path dir = config.resolve_output_dir();
    std::filesystem::create_directories(dir);
    MeasureMeta meta{config.seed, n_paths, n_time, config.system};
    save_measure_json(base, meta, dir / (out_prefix + "_measure.json"));
    save_measure_marginal_csv(base, dir / (out_prefix + "_marginal.csv"));

    ordered_json j;
    j["meta"] = {{"seed", config.seed},
                 {"n_paths", n_paths},
                 {"n_time", n_time},
                 {"system", config.system}};
    j["energy_distances"] = distances;
    j["noise_floor"] = noise_floor;
    j["bootstrap_replicates"] = bootstrap;
    j["pass"] = pass;
    write_json(j, dir / (out_prefix + "_report.json"));
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_export_plot(const std::filesystem::path& measure_json,
                    const std::filesystem::path& out_csv) {
    const EmpiricalMeasure measure = load_measure_json(measure_json);
    save_measure_marginal_csv(measure, out_csv);
    return kExitOk;
}

Corruption parse_corruption(const std::string& name) {
    if (name.empty() || name == "none") return Corruption::None;
    if (name == "period") return Corruption::Period;
    if (name == "radius") return Corruption::Radius;
    if (name == "rate") return Corruption::AngularRate;
    throw ConfigError("corrupt must be one of: none, period, radius, rate");
}

}  // namespace rds
