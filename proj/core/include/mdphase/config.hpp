#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mdphase/scenario.hpp"

namespace mdphase {

/**
 * JSON scenario configuration:
 *
 * {
 *   "scenario": "general" | "stern_gerlach" | "peres",
 *   "grid": {"n_points": 1024, "q_min": -40.0, "q_max": 40.0},
 *   "mass": 1.0,
 *   "potential": {"kind": "none|linear|harmonic|quartic|polynomial",
 *                 "params": {...}},
 *   "packet": {"center": 0.0, "width": 1.0, "momentum": 0.0},
 *   "branches": [{"c_re": ..., "c_im": ..., "eigenvalue": ...}, ...],
 *   "coupling_length": 10.0,
 *   "times": [0.0, ...],
 *   "pair": [i, j],
 *   "seed": 0,
 *   "falsifier_mode": false,
 *   "peres_z_threshold": 0.1,
 *   "system_phase_coeff": 0.0
 * }
 *
 * Unknown keys are rejected with the offending path. Defaults: mass 1,
 * potential none, packet (0, 1, 0), times [0], pair per scenario, seed 0,
 * falsifier_mode false. Unless falsifier_mode is set the coefficients must
 * satisfy sum |c_n|^2 = 1 within 1e-8.
 */
ScenarioConfig parse_config(const std::string& path);

/// Same, from already-loaded JSON text (path used only for messages).
ScenarioConfig parse_config_text(const std::string& text, const std::string& path = "<inline>");

/// Resolved-config echo with every default filled in; parse(echo) is the
/// identity.
nlohmann::ordered_json config_to_json(const ScenarioConfig& cfg);

} // namespace mdphase
