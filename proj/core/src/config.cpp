#include "mdphase/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "mdphase/errors.hpp"

namespace mdphase {

namespace {

using json = nlohmann::json;

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw ConfigError("unknown key \"" + key + "\" at " + path);
        }
    }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError("missing key \"" + key + "\" at " + path);
    return *it;
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where + " must be a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
    return v.get<int>();
}

Potential parse_potential(const json& j) {
    if (!j.is_object()) throw ConfigError("$.potential must be an object");
    require_keys(j, "$.potential", {"kind", "params"});
    const std::string kind = require(j, "$.potential", "kind").get<std::string>();
    const json params = j.value("params", json::object());
    if (!params.is_object()) throw ConfigError("$.potential.params must be an object");

    if (kind == "none") {
        require_keys(params, "$.potential.params", {});
        return Potential::free();
    }
    if (kind == "linear") {
        require_keys(params, "$.potential.params", {"k"});
        return Potential::linear(as_number(require(params, "$.potential.params", "k"),
                                           "$.potential.params.k"));
    }
    if (kind == "harmonic") {
        require_keys(params, "$.potential.params", {"omega"});
        return Potential::harmonic(as_number(require(params, "$.potential.params", "omega"),
                                             "$.potential.params.omega"));
    }
    if (kind == "quartic") {
        require_keys(params, "$.potential.params", {"lambda"});
        return Potential::quartic(as_number(require(params, "$.potential.params", "lambda"),
                                            "$.potential.params.lambda"));
    }
    if (kind == "polynomial") {
        require_keys(params, "$.potential.params", {"coeffs"});
        const json& coeffs = require(params, "$.potential.params", "coeffs");
        if (!coeffs.is_array() || coeffs.empty()) {
            throw ConfigError("$.potential.params.coeffs must be a non-empty array");
        }
        std::vector<double> c;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            c.push_back(as_number(coeffs[k], "$.potential.params.coeffs[" +
                                                 std::to_string(k) + "]"));
        }
        return Potential::polynomial(std::move(c));
    }
    throw ConfigError("unknown potential kind \"" + kind + "\"");
}

ScenarioKind parse_kind(const std::string& s) {
    if (s == "general") return ScenarioKind::general;
    if (s == "stern_gerlach") return ScenarioKind::stern_gerlach;
    if (s == "peres") return ScenarioKind::peres;
    throw ConfigError("unknown scenario \"" + s + "\"");
}

void physics_validation(const ScenarioConfig& cfg) {
    // Normalisation gate (the falsifier mode relaxes it deliberately).
    double weight = 0.0;
    for (const auto& b : cfg.branches) weight += std::norm(b.c);
    if (!cfg.falsifier_mode && std::abs(weight - 1.0) > 1e-8) {
        throw ConfigError("sum |c_n|^2 = " + std::to_string(weight) +
                          " but branches must be normalized (set falsifier_mode to "
                          "explore unnormalized states)");
    }

    // Packet and shifted-packet margins: 6-sigma support inside the grid.
    const double w = cfg.packet.width;
    if (!(w > 0.0)) throw ConfigError("$.packet.width must be positive");
    for (std::size_t n = 0; n < cfg.branches.size(); ++n) {
        const double center = cfg.packet.center + cfg.branch_shift(static_cast<int>(n));
        if (center - 6.0 * w < cfg.grid.q_min || center + 6.0 * w > cfg.grid.q_max) {
            throw ConfigError("branch " + std::to_string(n + 1) +
                              " pointer packet (center " + std::to_string(center) +
                              ", width " + std::to_string(w) +
                              ") violates the grid margin");
        }
    }

    const auto [i, j] = cfg.resolved_pair();
    const int n_branches = static_cast<int>(cfg.branches.size());
    if (i < 1 || i > n_branches || j < 1 || j > n_branches || i == j) {
        throw ConfigError("pair labels must be distinct and within 1.." +
                          std::to_string(n_branches));
    }
}

} // namespace

ScenarioConfig parse_config_text(const std::string& text, const std::string& path) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": invalid JSON: " + e.what());
    }
    if (!j.is_object()) throw ConfigError(path + ": config root must be an object");

    require_keys(j, "$",
                 {"scenario", "grid", "mass", "potential", "packet", "branches",
                  "coupling_length", "times", "pair", "seed", "falsifier_mode",
                  "peres_z_threshold", "system_phase_coeff"});

    ScenarioConfig cfg;
    cfg.scenario = parse_kind(require(j, "$", "scenario").get<std::string>());

    const json& grid = require(j, "$", "grid");
    require_keys(grid, "$.grid", {"n_points", "q_min", "q_max"});
    cfg.grid.n_points = as_int(require(grid, "$.grid", "n_points"), "$.grid.n_points");
    cfg.grid.q_min = as_number(require(grid, "$.grid", "q_min"), "$.grid.q_min");
    cfg.grid.q_max = as_number(require(grid, "$.grid", "q_max"), "$.grid.q_max");

    cfg.mass = j.contains("mass") ? as_number(j["mass"], "$.mass") : 1.0;
    if (!(cfg.mass > 0.0)) throw ConfigError("$.mass must be positive");

    cfg.potential = j.contains("potential") ? parse_potential(j["potential"])
                                            : Potential::free();

    if (j.contains("packet")) {
        const json& packet = j["packet"];
        require_keys(packet, "$.packet", {"center", "width", "momentum"});
        cfg.packet.center =
            packet.contains("center") ? as_number(packet["center"], "$.packet.center") : 0.0;
        cfg.packet.width =
            packet.contains("width") ? as_number(packet["width"], "$.packet.width") : 1.0;
        cfg.packet.momentum = packet.contains("momentum")
                                  ? as_number(packet["momentum"], "$.packet.momentum")
                                  : 0.0;
    }

    const json& branches = require(j, "$", "branches");
    if (!branches.is_array() || branches.empty()) {
        throw ConfigError("$.branches must be a non-empty array");
    }
    for (std::size_t n = 0; n < branches.size(); ++n) {
        const std::string where = "$.branches[" + std::to_string(n) + "]";
        const json& b = branches[n];
        require_keys(b, where, {"c_re", "c_im", "eigenvalue"});
        BranchInput input;
        input.c = cplx(b.contains("c_re") ? as_number(b["c_re"], where + ".c_re") : 0.0,
                       b.contains("c_im") ? as_number(b["c_im"], where + ".c_im") : 0.0);
        input.eigenvalue =
            as_number(require(b, where, "eigenvalue"), where + ".eigenvalue");
        cfg.branches.push_back(input);
    }

    cfg.coupling_length =
        as_number(require(j, "$", "coupling_length"), "$.coupling_length");

    if (j.contains("times")) {
        const json& times = j["times"];
        if (!times.is_array() || times.empty()) {
            throw ConfigError("$.times must be a non-empty array");
        }
        cfg.times.clear();
        for (std::size_t k = 0; k < times.size(); ++k) {
            cfg.times.push_back(as_number(times[k], "$.times[" + std::to_string(k) + "]"));
        }
        for (std::size_t k = 0; k < cfg.times.size(); ++k) {
            if (cfg.times[k] < 0.0 || (k > 0 && cfg.times[k] <= cfg.times[k - 1])) {
                throw ConfigError("$.times must be sorted ascending and non-negative");
            }
        }
    }

    if (j.contains("pair")) {
        const json& pair = j["pair"];
        if (!pair.is_array() || pair.size() != 2) {
            throw ConfigError("$.pair must be an array [i, j]");
        }
        cfg.pair = {as_int(pair[0], "$.pair[0]"), as_int(pair[1], "$.pair[1]")};
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0) {
            throw ConfigError("$.seed must be a non-negative integer");
        }
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("falsifier_mode")) {
        if (!j["falsifier_mode"].is_boolean()) {
            throw ConfigError("$.falsifier_mode must be a boolean");
        }
        cfg.falsifier_mode = j["falsifier_mode"].get<bool>();
    }
    if (j.contains("peres_z_threshold")) {
        cfg.peres_z_threshold = as_number(j["peres_z_threshold"], "$.peres_z_threshold");
        if (!(cfg.peres_z_threshold > 0.0 && cfg.peres_z_threshold < 1.0)) {
            throw ConfigError("$.peres_z_threshold must lie in (0, 1)");
        }
    }
    if (j.contains("system_phase_coeff")) {
        cfg.system_phase_coeff = as_number(j["system_phase_coeff"], "$.system_phase_coeff");
    }

    // Grid constraints surface early with the field path.
    try {
        make_grid(cfg.grid.n_points, cfg.grid.q_min, cfg.grid.q_max);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("$.grid: ") + e.what());
    }
    physics_validation(cfg);
    return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

nlohmann::ordered_json config_to_json(const ScenarioConfig& cfg) {
    nlohmann::ordered_json j;
    j["scenario"] = to_string(cfg.scenario);
    j["grid"] = {{"n_points", cfg.grid.n_points},
                 {"q_min", cfg.grid.q_min},
                 {"q_max", cfg.grid.q_max}};
    j["mass"] = cfg.mass;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    switch (cfg.potential.kind) {
        case PotentialKind::none: break;
        case PotentialKind::linear: params["k"] = cfg.potential.k; break;
        case PotentialKind::harmonic: params["omega"] = cfg.potential.omega; break;
        case PotentialKind::quartic: params["lambda"] = cfg.potential.lambda; break;
        case PotentialKind::polynomial: params["coeffs"] = cfg.potential.coeffs; break;
    }
    j["potential"] = {{"kind", to_string(cfg.potential.kind)}, {"params", params}};
    j["packet"] = {{"center", cfg.packet.center},
                   {"width", cfg.packet.width},
                   {"momentum", cfg.packet.momentum}};
    auto branches = nlohmann::ordered_json::array();
    for (const auto& b : cfg.branches) {
        branches.push_back({{"c_re", b.c.real()},
                            {"c_im", b.c.imag()},
                            {"eigenvalue", b.eigenvalue}});
    }
    j["branches"] = branches;
    j["coupling_length"] = cfg.coupling_length;
    j["times"] = cfg.times;
    const auto [i, jj] = cfg.resolved_pair();
    j["pair"] = {i, jj};
    j["seed"] = cfg.seed;
    j["falsifier_mode"] = cfg.falsifier_mode;
    j["peres_z_threshold"] = cfg.peres_z_threshold;
    j["system_phase_coeff"] = cfg.system_phase_coeff;
    return j;
}

} // namespace mdphase
