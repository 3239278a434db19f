#include "mdphase/driver.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include "mdphase/config.hpp"
#include "mdphase/errors.hpp"
#include "mdphase/falsifier.hpp"
#include "mdphase/report_io.hpp"
#include "mdphase/scenario.hpp"
#include "mdphase/version.hpp"

namespace mdphase {

namespace {

namespace fs = std::filesystem;

/// Bound verdicts gate the exit code: "violated" anywhere, or "undefined"
/// in the definite-state regime (the bounds cannot be satisfied once a
/// definite macrostate is assigned).
bool series_flags_violation(const TimeSeries& ts) {
    for (const auto& row : ts.rows) {
        for (const auto& b : row.bounds) {
            if (b.verdict == Verdict::violated) return true;
            if (b.verdict == Verdict::undefined && ts.definite_state) return true;
        }
    }
    return false;
}

std::string joined(const fs::path& dir, const std::string& name) {
    return (dir / name).string();
}

struct SweepAxis {
    std::string field;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

SweepAxis parse_axis(const std::string& spec) {
    SweepAxis axis;
    std::vector<std::string> parts;
    std::string token;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(token);
            token.clear();
        } else {
            token += c;
        }
    }
    parts.push_back(token);
    if (parts.size() != 4) {
        throw ConfigError("axis spec must be FIELD:START:STOP:COUNT, got \"" + spec + "\"");
    }
    axis.field = parts[0];
    try {
        axis.start = std::stod(parts[1]);
        axis.stop = std::stod(parts[2]);
        axis.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw ConfigError("axis spec has non-numeric START/STOP/COUNT: \"" + spec + "\"");
    }
    if (axis.count < 2) throw ConfigError("axis count must be >= 2");
    return axis;
}

/// Applies one swept value to the raw config JSON. Dotted paths address
/// nested numeric fields; "L" aliases coupling_length and "alpha_sq" rescales
/// the first-branch weight of a two-branch config (phases preserved).
nlohmann::json with_axis_value(const nlohmann::json& base, const std::string& field,
                               double value) {
    nlohmann::json j = base;
    if (field == "alpha_sq" || field == "alpha2") {
        if (!j.contains("branches") || !j["branches"].is_array() ||
            j["branches"].size() != 2) {
            throw ConfigError("alpha_sq sweeps require exactly two branches");
        }
        if (!(value > 0.0 && value < 1.0)) {
            throw ConfigError("alpha_sq sweeps require values in (0, 1)");
        }
        auto rescale = [](nlohmann::json& branch, double target_sq) {
            const double re = branch.value("c_re", 0.0);
            const double im = branch.value("c_im", 0.0);
            const double mag = std::sqrt(re * re + im * im);
            const double target = std::sqrt(target_sq);
            if (mag < 1e-15) {
                branch["c_re"] = target;
                branch["c_im"] = 0.0;
            } else {
                branch["c_re"] = re / mag * target;
                branch["c_im"] = im / mag * target;
            }
        };
        rescale(j["branches"][0], value);
        rescale(j["branches"][1], 1.0 - value);
        return j;
    }

    std::string path = (field == "L") ? "coupling_length" : field;
    std::vector<std::string> keys;
    std::string token;
    for (char c : path) {
        if (c == '.') {
            keys.push_back(token);
            token.clear();
        } else {
            token += c;
        }
    }
    keys.push_back(token);

    nlohmann::json* node = &j;
    for (std::size_t k = 0; k + 1 < keys.size(); ++k) {
        if (!node->contains(keys[k]) || !(*node)[keys[k]].is_object()) {
            throw ConfigError("axis field \"" + field + "\" does not address an object");
        }
        node = &(*node)[keys[k]];
    }
    const std::string& leaf = keys.back();
    if (!node->contains(leaf)) {
        throw ConfigError("axis field \"" + field + "\" is not present in the config");
    }
    if (!(*node)[leaf].is_number() || (*node)[leaf].is_boolean()) {
        throw ConfigError("axis field \"" + field + "\" is not numeric");
    }
    (*node)[leaf] = value;
    return j;
}

struct ScenarioOutcome {
    TimeSeries series;
    std::optional<PeresReport> peres;
};

ScenarioOutcome execute(const ScenarioConfig& cfg) {
    ScenarioOutcome out;
    switch (cfg.scenario) {
        case ScenarioKind::general:
            out.series = run_general(cfg);
            break;
        case ScenarioKind::stern_gerlach:
            out.series = run_stern_gerlach(cfg);
            break;
        case ScenarioKind::peres: {
            PeresReport report = run_peres(cfg);
            out.series = report.series;
            out.peres = std::move(report);
            break;
        }
    }
    return out;
}

} // namespace

nlohmann::ordered_json manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["artifact"] = "mdphase";
    j["version"] = m.version;
    j["config_path"] = m.config_path;
    j["resolved_config"] = m.resolved_config;
    j["seed"] = m.seed;
    j["duration_seconds"] = m.duration_seconds;
    j["outputs"] = m.outputs;
    return j;
}

CommandResult cmd_run(const std::string& config_path, const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    const ScenarioConfig cfg = parse_config(config_path);
    const ScenarioOutcome outcome = execute(cfg);

    const fs::path dir(out_dir);
    fs::create_directories(dir);

    CommandResult result;
    result.manifest.config_path = config_path;
    result.manifest.resolved_config = config_to_json(cfg);
    result.manifest.version = version_string;
    result.manifest.seed = cfg.seed;

    const std::string csv_path = joined(dir, "timeseries.csv");
    write_text_file(csv_path, timeseries_csv(outcome.series));
    result.manifest.outputs.push_back(csv_path);

    const std::string bounds_path = joined(dir, "bounds.json");
    write_json_file(bounds_path, bounds_json(outcome.series));
    result.manifest.outputs.push_back(bounds_path);

    if (outcome.peres) {
        const std::string peres_path = joined(dir, "peres_report.json");
        write_json_file(peres_path, peres_json(*outcome.peres));
        result.manifest.outputs.push_back(peres_path);
    }

    const std::string manifest_path = joined(dir, "manifest.json");
    result.manifest.outputs.push_back(manifest_path);
    result.manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_json_file(manifest_path, manifest_json(result.manifest));

    result.exit_code = series_flags_violation(outcome.series) ? exit_violated : exit_ok;
    return result;
}

CommandResult cmd_sweep(const std::string& config_path, const std::string& axis_spec,
                        const std::string& out_dir, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    const SweepAxis axis = parse_axis(axis_spec);
    if (jobs < 1) throw ConfigError("--jobs must be >= 1");

    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file: " + config_path);
    nlohmann::json base = nlohmann::json::parse(in, nullptr, true);

    std::vector<double> values(static_cast<std::size_t>(axis.count));
    for (int k = 0; k < axis.count; ++k) {
        values[static_cast<std::size_t>(k)] =
            axis.start + (axis.stop - axis.start) * k / (axis.count - 1);
    }

    // Validate every point up front so a bad axis fails before any compute.
    std::vector<ScenarioConfig> configs;
    configs.reserve(values.size());
    for (double v : values) {
        configs.push_back(
            parse_config_text(with_axis_value(base, axis.field, v).dump(), config_path));
    }

    std::vector<ScenarioOutcome> outcomes(values.size());
    std::vector<std::exception_ptr> failures(values.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(jobs, static_cast<int>(values.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t k = next.fetch_add(1);
                if (k >= values.size()) return;
                try {
                    outcomes[k] = execute(configs[k]);
                } catch (...) {
                    failures[k] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    const fs::path dir(out_dir);
    fs::create_directories(dir);

    std::string axis_column = axis.field;
    for (auto& c : axis_column) {
        if (c == '.') c = '_';
    }
    std::string csv = sweep_csv_header(outcomes.front().series, axis_column);
    bool violated = false;
    for (std::size_t k = 0; k < values.size(); ++k) {
        csv += sweep_csv_rows(outcomes[k].series, values[k]);
        violated = violated || series_flags_violation(outcomes[k].series);
    }

    CommandResult result;
    result.manifest.config_path = config_path;
    result.manifest.resolved_config = config_to_json(configs.front());
    result.manifest.resolved_config["sweep_axis"] = {{"field", axis.field},
                                                     {"start", axis.start},
                                                     {"stop", axis.stop},
                                                     {"count", axis.count}};
    result.manifest.version = version_string;
    result.manifest.seed = configs.front().seed;

    const std::string csv_path = joined(dir, "sweep.csv");
    write_text_file(csv_path, csv);
    result.manifest.outputs.push_back(csv_path);

    const std::string manifest_path = joined(dir, "manifest.json");
    result.manifest.outputs.push_back(manifest_path);
    result.manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_json_file(manifest_path, manifest_json(result.manifest));

    result.exit_code = violated ? exit_violated : exit_ok;
    return result;
}

CommandResult cmd_falsify(std::uint64_t trials, std::uint64_t seed,
                          const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    if (trials < 1) throw ConfigError("falsify: --trials must be >= 1");
    const FalsifierReport report = falsify_all(trials, seed);

    const fs::path dir(out_dir);
    fs::create_directories(dir);

    CommandResult result;
    result.manifest.config_path = "";
    result.manifest.resolved_config = {{"trials", trials}, {"seed", seed}};
    result.manifest.version = version_string;
    result.manifest.seed = seed;

    const std::string report_path = joined(dir, "falsifier_report.json");
    write_json_file(report_path, falsifier_json(report));
    result.manifest.outputs.push_back(report_path);

    const std::string manifest_path = joined(dir, "manifest.json");
    result.manifest.outputs.push_back(manifest_path);
    result.manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_json_file(manifest_path, manifest_json(result.manifest));

    result.exit_code = (report.uncertainty.violations > 0) ? exit_violated : exit_ok;
    return result;
}

} // namespace mdphase
