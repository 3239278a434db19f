#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mdphase {

/// Exit-code contract shared by every subcommand: 0 clean, 1 operational
/// error, 2 at least one bound verdict "violated" (or "undefined" in the
/// definite-state regime), so sweeps can be scripted without parsing logs.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_violated = 2;

struct RunManifest {
    std::string config_path;
    nlohmann::ordered_json resolved_config;
    std::string version;
    double duration_seconds = 0.0;
    std::vector<std::string> outputs;
    std::uint64_t seed = 0;
};

struct CommandResult {
    int exit_code = exit_ok;
    RunManifest manifest;
};

/// Runs one scenario config; writes timeseries.csv, bounds.json,
/// manifest.json (plus peres_report.json for peres scenarios) into out_dir.
CommandResult cmd_run(const std::string& config_path, const std::string& out_dir);

/// One sub-run per sweep point; writes sweep.csv and manifest.json.
/// axis_spec is FIELD:START:STOP:COUNT where FIELD is a numeric config field
/// (dotted paths allowed, e.g. packet.width, potential.params.k; aliases
/// "L" = coupling_length and "alpha_sq" = weight of the first branch).
CommandResult cmd_sweep(const std::string& config_path, const std::string& axis_spec,
                        const std::string& out_dir, int jobs);

/// Full falsifier census; writes falsifier_report.json. Exit 2 when the
/// uncertainty theorem reports any violation (bug signal).
CommandResult cmd_falsify(std::uint64_t trials, std::uint64_t seed,
                          const std::string& out_dir);

nlohmann::ordered_json manifest_json(const RunManifest& m);

} // namespace mdphase
