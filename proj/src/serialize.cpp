// SPDX-License-Identifier: Apache-2.0
#include "rds/serialize.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "rds/errors.hpp"

namespace rds {
namespace {

std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot open for writing: " + file.string());
    return out;
}

nlohmann::ordered_json parse_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open for reading: " + file.string());
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("malformed JSON in " + file.string() + ": " + e.what());
    }
    return j;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc()) throw IoError("format_double failed");
    return std::string(buf, res.ptr);
}

void save_path_csv(const SamplePath& path, const std::filesystem::path& file) {
    std::ofstream out = open_out(file);
    out << "# dt=" << format_double(path.dt()) << " window_lo="
        << format_double(path.window_lo()) << " window_hi="
        << format_double(path.window_hi()) << " period_tag="
        << (path.period_tag() ? format_double(*path.period_tag()) : std::string("none"))
        << "\n";
    out << "t,value\n";
    for (std::size_t i = 0; i < path.size(); ++i) {
        out << format_double(path.knot_time(i)) << "," << format_double(path.values()[i])
            << "\n";
    }
    if (!out) throw IoError("write failed: " + file.string());
}

nlohmann::ordered_json path_to_json(const SamplePath& path) {
    nlohmann::ordered_json j;
    j["window_lo"] = path.window_lo();
    j["window_hi"] = path.window_hi();
    j["dt"] = path.dt();
    if (path.period_tag()) {
        j["period_tag"] = *path.period_tag();
    } else {
        j["period_tag"] = nullptr;
    }
    j["values"] = path.values();
    return j;
}

SamplePath path_from_json(const nlohmann::ordered_json& j) {
    try {
        std::optional<double> tag;
        if (!j.at("period_tag").is_null()) tag = j.at("period_tag").get<double>();
        return SamplePath(j.at("window_lo").get<double>(), j.at("dt").get<double>(),
                          j.at("values").get<std::vector<double>>(), tag);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("bad path JSON: ") + e.what());
    }
}

void save_path_json(const SamplePath& path, const std::filesystem::path& file) {
    std::ofstream out = open_out(file);
    out << path_to_json(path).dump(2) << "\n";
    if (!out) throw IoError("write failed: " + file.string());
}

SamplePath load_path_json(const std::filesystem::path& file) {
    return path_from_json(parse_file(file));
}

nlohmann::ordered_json measure_to_json(const EmpiricalMeasure& measure,
                                       const MeasureMeta& meta) {
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (const MeasureAtom& a : measure.atoms()) {
        nlohmann::ordered_json atom;
        atom["x"] = a.point.x;
        atom["y"] = a.point.y;
        atom["weight"] = a.weight;
        atom["fiber_id"] = a.fiber;
        atoms.push_back(std::move(atom));
    }
    nlohmann::ordered_json j;
    j["atoms"] = std::move(atoms);
    j["meta"] = {{"seed", meta.seed},
                 {"n_paths", meta.n_paths},
                 {"n_time", meta.n_time},
                 {"system", meta.system}};
    return j;
}

EmpiricalMeasure measure_from_json(const nlohmann::ordered_json& j) {
    try {
        std::vector<MeasureAtom> atoms;
        for (const auto& a : j.at("atoms")) {
            atoms.push_back({{a.at("x").get<double>(), a.at("y").get<double>()},
                             a.at("weight").get<double>(),
                             -1});
        }
        return EmpiricalMeasure(std::move(atoms));
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("bad measure JSON: ") + e.what());
    }
}

void save_measure_json(const EmpiricalMeasure& measure, const MeasureMeta& meta,
                       const std::filesystem::path& file) {
    std::ofstream out = open_out(file);
    out << measure_to_json(measure, meta).dump(2) << "\n";
    if (!out) throw IoError("write failed: " + file.string());
}

EmpiricalMeasure load_measure_json(const std::filesystem::path& file) {
    return measure_from_json(parse_file(file));
}

void save_measure_marginal_csv(const EmpiricalMeasure& measure,
                               const std::filesystem::path& file) {
    std::ofstream out = open_out(file);
    out << "x,y,weight\n";
    for (const MeasureAtom& a : measure.atoms()) {
        out << format_double(a.point.x) << "," << format_double(a.point.y) << ","
            << format_double(a.weight) << "\n";
    }
    if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace rds
