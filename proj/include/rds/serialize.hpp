// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "rds/measures.hpp"
#include "rds/sample_path.hpp"

namespace rds {

/// Format a double with 17 significant digits (bit-exact on parse),
/// locale-independent.
std::string format_double(double v);

/// CSV with a metadata header line (dt, window, period tag), then t,value
/// rows at every knot.
void save_path_csv(const SamplePath& path, const std::filesystem::path& file);

nlohmann::ordered_json path_to_json(const SamplePath& path);
SamplePath path_from_json(const nlohmann::ordered_json& j);
void save_path_json(const SamplePath& path, const std::filesystem::path& file);
SamplePath load_path_json(const std::filesystem::path& file);

struct MeasureMeta {
    std::uint64_t seed = 0;
    int n_paths = 0;
    int n_time = 0;
    std::string system;
};

nlohmann::ordered_json measure_to_json(const EmpiricalMeasure& measure,
                                       const MeasureMeta& meta);
/// Atoms only; fiber paths are not serialized.
EmpiricalMeasure measure_from_json(const nlohmann::ordered_json& j);
void save_measure_json(const EmpiricalMeasure& measure, const MeasureMeta& meta,
                       const std::filesystem::path& file);
EmpiricalMeasure load_measure_json(const std::filesystem::path& file);

/// State-space marginal as plot-ready CSV: x,y,weight rows.
void save_measure_marginal_csv(const EmpiricalMeasure& measure,
                               const std::filesystem::path& file);

}  // namespace rds
