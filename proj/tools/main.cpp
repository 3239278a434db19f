#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "mdphase/driver.hpp"
#include "mdphase/errors.hpp"
#include "mdphase/version.hpp"

namespace {

// Machine-readable error channel: one JSON object on stderr, exit 1.
int fail(const char* type, const std::string& message) {
    nlohmann::ordered_json err;
    err["error"] = {{"type", type}, {"message", message}};
    std::cerr << err.dump() << "\n";
    return mdphase::exit_error;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"mdphase - pointer-measurement phase laboratory"};
    app.set_version_flag("--version", std::string("mdphase ") + mdphase::version_string);
    app.require_subcommand(1);

    int jobs = 1;
    app.add_option("--jobs", jobs, "parallel sub-runs for sweep")->capture_default_str();

    std::string run_config, run_out = "out";
    CLI::App* run = app.add_subcommand("run", "run one scenario config");
    run->fallthrough();
    run->add_option("config", run_config, "scenario config (JSON)")->required();
    run->add_option("--out", run_out, "output directory")->capture_default_str();

    std::string sweep_config, sweep_axis, sweep_out = "out";
    CLI::App* sweep = app.add_subcommand("sweep", "sweep a numeric config field");
    sweep->fallthrough();
    sweep->add_option("config", sweep_config, "scenario config (JSON)")->required();
    sweep->add_option("--axis", sweep_axis, "FIELD:START:STOP:COUNT")->required();
    sweep->add_option("--out", sweep_out, "output directory")->capture_default_str();

    std::uint64_t trials = 10000, seed = 1;
    std::string falsify_out = "out";
    CLI::App* falsify = app.add_subcommand("falsify", "Monte-Carlo inequality census");
    falsify->fallthrough();
    falsify->add_option("--trials", trials, "trials per census")->capture_default_str();
    falsify->add_option("--seed", seed, "rng seed")->capture_default_str();
    falsify->add_option("--out", falsify_out, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return mdphase::cmd_run(run_config, run_out).exit_code;
        if (sweep->parsed()) {
            return mdphase::cmd_sweep(sweep_config, sweep_axis, sweep_out, jobs).exit_code;
        }
        if (falsify->parsed()) {
            return mdphase::cmd_falsify(trials, seed, falsify_out).exit_code;
        }
    } catch (const mdphase::ConfigError& e) {
        return fail("config", e.what());
    } catch (const mdphase::GeometryError& e) {
        return fail("geometry", e.what());
    } catch (const mdphase::NumericsError& e) {
        return fail("numerics", e.what());
    } catch (const mdphase::DomainError& e) {
        return fail("domain", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
    return mdphase::exit_error;
}

} // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
